#include <doctest.h>

#include <cmath>

#include "ahlfors/errors.hpp"
#include "ahlfors/quadrature.hpp"
#include "test_util.hpp"

using namespace ahlfors;

TEST_CASE("Gauss-Legendre small orders match the classical values") {
  const GaussLegendre g2(2);
  CHECK(g2.nodes()[0] == doctest::Approx(-0.5773502691896257).epsilon(1e-14));
  CHECK(g2.nodes()[1] == doctest::Approx(0.5773502691896257).epsilon(1e-14));
  CHECK(g2.weights()[0] == doctest::Approx(1.0).epsilon(1e-14));

  const GaussLegendre g3(3);
  CHECK(g3.nodes()[0] == doctest::Approx(-0.7745966692414834).epsilon(1e-14));
  CHECK(g3.nodes()[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(g3.weights()[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK(g3.weights()[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("rule of order n integrates polynomials up to degree 2n-1 exactly") {
  for (int n : {4, 9, 16}) {
    const GaussLegendre g(n);
    for (int degree = 0; degree <= 2 * n - 1; ++degree) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += g.weights()[i] * std::pow(g.nodes()[i], degree);
      }
      const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
      CHECK(std::abs(acc - exact) < 1e-13);
    }
  }
}

TEST_CASE("weights are positive and sum to 2") {
  for (int n : {1, 2, 7, 64, 257}) {
    const GaussLegendre g(n);
    double sum = 0.0;
    for (double w : g.weights()) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("smooth integrand matches adaptive Simpson") {
  const GaussLegendre g(24);
  auto f = [](double x) { return std::exp(x) * std::cos(3.0 * x); };
  double acc = 0.0;
  for (int i = 0; i < g.size(); ++i) acc += g.weights()[i] * f(g.nodes()[i]);
  const Complex oracle =
      testutil::adaptive_simpson([&](double x) { return Complex(f(x), 0.0); }, -1.0, 1.0);
  CHECK(std::abs(acc - oracle.real()) < 1e-12);
}

TEST_CASE("invalid order is rejected") {
  CHECK_THROWS_AS(GaussLegendre(0), InvalidParameterError);
}
