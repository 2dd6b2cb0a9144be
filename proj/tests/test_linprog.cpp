#include <doctest.h>

#include <random>

#include "ahlfors/errors.hpp"
#include "ahlfors/linprog.hpp"

using namespace ahlfors;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("small LP with a known optimum") {
  // min y1 + y2 + y3 s.t. y1*[1,0] + y2*[0,1] + y3*[1,1] = [2,1]
  SimplexLp lp(2);
  lp.add_column(vec2(1, 0), 1.0);
  lp.add_column(vec2(0, 1), 1.0);
  lp.add_column(vec2(1, 1), 1.0);
  lp.set_rhs(vec2(2, 1));
  const auto s = lp.solve();
  CHECK(s.objective == doctest::Approx(2.0).epsilon(1e-12));
  // complementary slackness: A^T pi <= c with equality on basic columns
  CHECK(s.multipliers(0) <= 1.0 + 1e-9);
  CHECK(s.multipliers(0) + s.multipliers(1) <= 1.0 + 1e-9);
}

TEST_CASE("negative rhs components are handled") {
  SimplexLp lp(2);
  lp.add_column(vec2(1, 0), 1.0);
  lp.add_column(vec2(-1, 0), 1.0);
  lp.add_column(vec2(0, 1), 1.0);
  lp.add_column(vec2(0, -1), 1.0);
  lp.set_rhs(vec2(-0.5, 0.7));
  const auto s = lp.solve();
  CHECK(s.objective == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(s.multipliers(0) == doctest::Approx(-1.0));
  CHECK(s.multipliers(1) == doctest::Approx(1.0));
}

TEST_CASE("warm start after adding a cheaper column") {
  SimplexLp lp(2);
  lp.add_column(vec2(1, 0), 1.0);
  lp.add_column(vec2(0, 1), 1.0);
  lp.set_rhs(vec2(1, 1));
  CHECK(lp.solve().objective == doctest::Approx(2.0));
  lp.add_column(vec2(1, 1), 1.0);  // covers both rows at once
  const auto s = lp.solve();
  CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.y[2] == doctest::Approx(1.0));
}

TEST_CASE("explicit starting basis skips phase 1") {
  SimplexLp lp(2);
  const int c0 = lp.add_column(vec2(1, 0), 5.0);
  const int c1 = lp.add_column(vec2(0, 1), 5.0);
  lp.add_column(vec2(1, 1), 1.0);
  lp.set_rhs(vec2(2, 1));
  lp.set_starting_basis({c0, c1});
  const auto s = lp.solve();
  CHECK(s.objective == doctest::Approx(6.0).epsilon(1e-12));  // y3=1, y1=1
  CHECK_THROWS_AS(lp.set_starting_basis({c0}), InvalidParameterError);
}

TEST_CASE("infeasible equality system is reported") {
  SimplexLp lp(2);
  lp.add_column(vec2(1, 0), 1.0);  // second row unreachable
  lp.set_rhs(vec2(1, 1));
  CHECK_THROWS_AS(lp.solve(), InternalError);
}

TEST_CASE("optimality certificate on random instances") {
  // Random feasible LPs; verify primal feasibility, dual feasibility and
  // complementary slackness of the reported solution.
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4, m = 40;
    SimplexLp lp(n);
    Eigen::MatrixXd a(n, m);
    Eigen::VectorXd costs(m);
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd col(n);
      for (int i = 0; i < n; ++i) col(i) = u(rng);
      const double cost = 1.0 + 0.5 * u(rng);
      a.col(j) = col;
      costs(j) = cost;
      lp.add_column(col, cost);
    }
    // rhs built from a random nonnegative combination -> feasible
    Eigen::VectorXd y0 = Eigen::VectorXd::Zero(m);
    for (int j = 0; j < m; ++j) y0(j) = std::max(0.0, u(rng));
    const Eigen::VectorXd b = a * y0;
    lp.set_rhs(b);
    const auto s = lp.solve();

    Eigen::VectorXd y(m);
    for (int j = 0; j < m; ++j) y(j) = s.y[j];
    CHECK((a * y - b).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(y.minCoeff() > -1e-10);
    CHECK(s.objective <= costs.dot(y0) + 1e-8);  // no worse than the seed point
    for (int j = 0; j < m; ++j) {
      const double reduced = costs(j) - s.multipliers.dot(a.col(j));
      CHECK(reduced > -1e-7);
      if (y(j) > 1e-9) CHECK(std::abs(reduced) < 1e-7);
    }
  }
}

TEST_CASE("deterministic pivot path") {
  auto run = [] {
    SimplexLp lp(3);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int j = 0; j < 30; ++j) {
      Eigen::VectorXd col(3);
      col << u(rng), u(rng), u(rng);
      lp.add_column(col, 1.0 + 0.1 * u(rng));
    }
    Eigen::VectorXd b(3);
    b << 0.3, -0.2, 0.5;
    lp.set_rhs(b);
    return lp.solve();
  };
  const auto s1 = run();
  const auto s2 = run();
  CHECK(s1.objective == s2.objective);
  CHECK(s1.pivots == s2.pivots);
  CHECK(s1.basis == s2.basis);
}
