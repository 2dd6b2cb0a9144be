#include <doctest.h>

#include <cmath>

#include "ahlfors/closed_form.hpp"
#include "ahlfors/errors.hpp"
#include "ahlfors/solver.hpp"
#include "test_util.hpp"

using namespace ahlfors;

namespace {

double sup_distance_on_grid(const AhlforsSolution& sol,
                            const AhlforsClosedForm& reference) {
  double sup = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex z = std::polar(0.09 * i, 2.0 * kPi * j / 10.0);
      sup = std::max(sup, std::abs(evaluate(sol, z) - reference(z)));
    }
  }
  return sup;
}

}  // namespace

TEST_CASE("basis construction") {
  SUBCASE("unit disk polynomials") {
    const RationalBasis b(Domain::unit_disk(), {3, 0}, BasePoint::at({0, 0}));
    CHECK(b.dimension() == 4);
    CHECK(std::abs(b.eval(3, Complex(0.5, 0.5)) -
                   std::pow(Complex(0.5, 0.5), 3)) < 1e-14);
  }
  SUBCASE("circle domain adds hole reciprocals") {
    const auto domain = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.4}});
    const RationalBasis b(domain, {2, 2}, BasePoint::at({0.7, 0}));
    CHECK(b.dimension() == 5);  // 1, z, z^2, (0.4/z), (0.4/z)^2
    CHECK(std::abs(b.eval(3, Complex(0.8, 0.0)) - Complex(0.5, 0.0)) < 1e-14);
  }
  SUBCASE("exterior with p = inf drops the constant") {
    const RationalBasis b(Domain::exterior_unit_disk(), {0, 3}, BasePoint::infinity());
    CHECK(b.dimension() == 3);
    // derivative-at-infinity functional: 1 on 1/z, 0 on deeper terms
    const auto d = b.derivative_at_base();
    CHECK(std::abs(d(0) - 1.0) < 1e-12);
    CHECK(std::abs(d(1)) < 1e-12);
    CHECK(std::abs(d(2)) < 1e-12);
  }
  SUBCASE("exterior with finite p keeps the constant") {
    const RationalBasis b(Domain::exterior_unit_disk(), {0, 3}, BasePoint::at({2, 0}));
    CHECK(b.dimension() == 4);
  }
  SUBCASE("real-slit domains are rejected") {
    const auto domain = Domain::real_slit_complement(RealSlitSet({{0.0, 1.0}}));
    CHECK_THROWS_AS(RationalBasis(domain, {4, 4}, BasePoint::infinity()),
                    UnsupportedVariantError);
  }
}

TEST_CASE("disk solve recovers the Schwarz-lemma extremal at p = 0") {
  const auto sol = solve_extremal(Domain::unit_disk(), BasePoint::at({0, 0}), {8, 8});
  CHECK(std::abs(sol.gamma - 1.0) < 1e-4);
  CHECK(std::abs(sol.coefficients[1] - 1.0) < 1e-4);
  for (int j = 0; j < static_cast<int>(sol.coefficients.size()); ++j) {
    if (j != 1) CHECK(std::abs(sol.coefficients[j]) < 1e-4);
  }
  CHECK(std::abs(evaluate(sol, Complex(0.5, 0.0)) - 0.5) < 1e-3);
}

TEST_CASE("disk solve at p = 0.3 matches the closed form") {
  const auto sol = solve_extremal(Domain::unit_disk(), BasePoint::at({0.3, 0}), {12, 12});
  const auto cf = ahlfors_disk(0.3);
  CHECK(std::abs(sol.gamma - cf.gamma()) < 1e-3);
  CHECK(sup_distance_on_grid(sol, cf) < 1e-3);
  SUBCASE("emergent vanishing at the base point") {
    CHECK(std::abs(evaluate(sol, Complex(0.3, 0.0))) < 1e-4);
  }
  SUBCASE("boundary modulus profile pinned to 1") {
    for (const auto& pt : boundary_modulus_profile(sol, 512)) {
      CHECK(pt.modulus >= 1.0 - 1e-3);
      CHECK(pt.modulus <= 1.0 + 1e-6);
    }
  }
  SUBCASE("fine-grid feasibility within twice the constraint tolerance") {
    CHECK(sol.diagnostics.max_boundary_modulus <= 1.0 + 2e-6);
  }
}

TEST_CASE("exterior disk solve at p = 2 approaches gamma = 1/3") {
  const auto sol =
      solve_extremal(Domain::exterior_unit_disk(), BasePoint::at({2, 0}), {10, 10});
  CHECK(std::abs(sol.gamma - 1.0 / 3.0) < 1e-3);
  CHECK(std::abs(evaluate(sol, Complex(2.0, 0.0))) < 1e-2);
}

TEST_CASE("exterior disk with base point infinity gives capacity 1") {
  const auto sol =
      solve_extremal(Domain::exterior_unit_disk(), BasePoint::infinity(), {16, 16});
  CHECK(std::abs(sol.gamma - 1.0) < 1e-3);
  // h ~ 1/z: value at a large point is small
  CHECK(std::abs(evaluate(sol, Complex(50.0, 0.0))) < 0.05);
}

TEST_CASE("gamma grows with the basis (nested feasible sets)") {
  const auto d = Domain::unit_disk();
  const auto p = BasePoint::at({0.45, 0});
  const double g8 = solve_extremal(d, p, {8, 8}).gamma;
  const double g10 = solve_extremal(d, p, {10, 10}).gamma;
  CHECK(g8 <= g10 + 1e-12);
}

TEST_CASE("two runs with different initial angle counts agree") {
  const auto d = Domain::unit_disk();
  const auto p = BasePoint::at({0.3, 0});
  SolverConfig a, b;
  a.angle_cuts = 16;
  b.angle_cuts = 24;
  const auto sa = solve_extremal(d, p, {12, 12}, a);
  const auto sb = solve_extremal(d, p, {12, 12}, b);
  double sup = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex z = std::polar(0.09 * i, 2.0 * kPi * j / 10.0);
      sup = std::max(sup, std::abs(evaluate(sa, z) - evaluate(sb, z)));
    }
  }
  CHECK(sup < 5e-4);
}

TEST_CASE("solver is deterministic end to end") {
  const auto d = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.3}});
  const auto s1 = solve_extremal(d, BasePoint::at({0.6, 0}), {8, 8});
  const auto s2 = solve_extremal(d, BasePoint::at({0.6, 0}), {8, 8});
  CHECK(s1.gamma == s2.gamma);
  REQUIRE(s1.coefficients.size() == s2.coefficients.size());
  for (std::size_t j = 0; j < s1.coefficients.size(); ++j) {
    CHECK(s1.coefficients[j] == s2.coefficients[j]);
  }
}

TEST_CASE("annulus solve: emergent properties without a closed form") {
  const auto d = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.3}});
  // Degree 24 puts the Laurent truncation below the emergent-vanishing and
  // boundary-band thresholds.
  const auto sol = solve_extremal(d, BasePoint::at({0.6, 0}), {24, 24});
  CHECK(sol.gamma > 1.0);
  CHECK(std::abs(evaluate(sol, Complex(0.6, 0.0))) < 1e-4);
  CHECK(sol.diagnostics.max_boundary_modulus <= 1.0 + 2e-6);
  SUBCASE("valence is 2 for an annulus") {
    CHECK(valence(sol, d, Complex(0, 0), 2048) == 2);
    CHECK(valence(sol, d, Complex(0.25, 0.0), 2048) == 2);
  }
  SUBCASE("valence is stable under doubling the contour resolution") {
    CHECK(valence(sol, d, Complex(0.1, 0.1), 1024) ==
          valence(sol, d, Complex(0.1, 0.1), 2048));
  }
}

TEST_CASE("valence on closed forms") {
  const auto cf = ahlfors_disk(0.3);
  const auto d = Domain::unit_disk();
  CHECK(valence(cf.function(), d, Complex(0.2, 0.0), 1024) == 1);
  CHECK(valence(cf.function(), d, Complex(-0.5, 0.3), 1024) == 1);
  SUBCASE("margin guard") {
    CHECK_THROWS_AS(valence(cf.function(), d, Complex(0.97, 0.0), 1024), MarginError);
  }
  SUBCASE("valence of the exterior map is 1") {
    const auto ext = ahlfors_exterior_disk(2.0);
    CHECK(valence(ext.function(), Domain::exterior_unit_disk(), Complex(0.2, 0.1),
                  2048) == 1);
  }
}

TEST_CASE("evaluate guards the domain") {
  const auto d = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.3}});
  const auto sol = solve_extremal(d, BasePoint::at({0.6, 0}), {8, 8});
  CHECK_THROWS_AS(evaluate(sol, Complex(0.1, 0.0)), OutOfDomainError);  // in the hole
  CHECK_THROWS_AS(evaluate(sol, Complex(2.0, 0.0)), OutOfDomainError);  // outside
  CHECK_NOTHROW(evaluate(sol, Complex(1.0, 0.0)));  // boundary belongs to the closure
}

TEST_CASE("base point must lie inside the domain") {
  CHECK_THROWS_AS(
      solve_extremal(Domain::unit_disk(), BasePoint::at({1.5, 0}), {8, 8}),
      InvalidParameterError);
  CHECK_THROWS_AS(
      solve_extremal(Domain::unit_disk(), BasePoint::infinity(), {8, 8}),
      InvalidParameterError);
}
