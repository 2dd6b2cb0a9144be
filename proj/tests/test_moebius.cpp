#include <doctest.h>

#include <random>

#include "ahlfors/errors.hpp"
#include "ahlfors/moebius.hpp"
#include "test_util.hpp"

using namespace ahlfors;

TEST_CASE("disk automorphism basics") {
  SUBCASE("p = 0 is the identity") {
    const auto t = MoebiusTransform::disk_automorphism(0.0);
    CHECK(std::abs(t(Complex(0.3, -0.7)) - Complex(0.3, -0.7)) < 1e-15);
  }
  SUBCASE("base point maps to zero") {
    const auto t = MoebiusTransform::disk_automorphism(0.5);
    CHECK(std::abs(t(0.5)) < 1e-15);
  }
  SUBCASE("derivative at p is 1/(1-|p|^2), checked by finite differences") {
    const auto t = MoebiusTransform::disk_automorphism(0.5);
    CHECK(t.derivative(0.5).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(t.derivative(0.5).imag() == doctest::Approx(0.0).epsilon(1e-12));
    const Complex fd = testutil::fd_derivative([&](Complex z) { return t(z); }, 0.5);
    CHECK(std::abs(t.derivative(0.5) - fd) < 1e-9);
  }
  SUBCASE("rejects |p| >= 1") {
    CHECK_THROWS_AS(MoebiusTransform::disk_automorphism(1.0), InvalidParameterError);
    CHECK_THROWS_AS(MoebiusTransform::disk_automorphism(Complex(0.8, 0.8)),
                    InvalidParameterError);
  }
}

TEST_CASE("interchange basics") {
  SUBCASE("a = 0 gives -z") {
    const auto t = MoebiusTransform::interchange(0.0);
    CHECK(std::abs(t(Complex(0.2, 0.1)) + Complex(0.2, 0.1)) < 1e-15);
  }
  SUBCASE("swaps 0 and a") {
    const auto t = MoebiusTransform::interchange(0.3);
    CHECK(std::abs(t(0.0) - 0.3) < 1e-15);
    CHECK(std::abs(t(0.3)) < 1e-15);
  }
  SUBCASE("involution, checked against sequential evaluation of the formula") {
    const Complex a(0.3, 0.4);
    const auto t = MoebiusTransform::interchange(a);
    const Complex z(0.1, -0.2);
    auto formula = [a](Complex w) { return (a - w) / (1.0 - std::conj(a) * w); };
    CHECK(std::abs(t(t(z)) - z) < 1e-14);
    CHECK(std::abs(t(t(z)) - formula(formula(z))) < 1e-14);
  }
  SUBCASE("rejects |a| >= 1") {
    CHECK_THROWS_AS(MoebiusTransform::interchange(Complex(0.0, 1.0)),
                    InvalidParameterError);
  }
}

TEST_CASE("unit circle is preserved to machine tolerance") {
  const auto transforms = {MoebiusTransform::disk_automorphism(Complex(0.37, -0.52)),
                           MoebiusTransform::interchange(Complex(-0.61, 0.2))};
  for (const auto& t : transforms) {
    for (int k = 0; k < 256; ++k) {
      const Complex z = std::polar(1.0, 2.0 * kPi * k / 256.0);
      CHECK(std::abs(std::abs(t(z)) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("composition by coefficients equals sequential evaluation") {
  const auto t1 = MoebiusTransform::disk_automorphism(Complex(0.2, 0.3));
  const auto t2 = MoebiusTransform::interchange(Complex(-0.4, 0.1));
  const auto composed = t1.compose(t2);
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> unit(-0.9, 0.9);
  for (int i = 0; i < 100; ++i) {
    const Complex z(unit(rng), unit(rng));
    CHECK(std::abs(composed(z) - t1(t2(z))) <= 1e-12);
  }
}

TEST_CASE("inverse and rotation") {
  const auto t = MoebiusTransform::disk_automorphism(Complex(0.3, -0.2));
  const auto id = t.compose(t.inverse());
  const Complex z(0.4, 0.4);
  CHECK(std::abs(id(z) - z) < 1e-13);
  const auto r = MoebiusTransform::rotation(kPi / 3.0);
  CHECK(std::abs(r(1.0) - std::polar(1.0, kPi / 3.0)) < 1e-15);
}

TEST_CASE("degenerate coefficients are rejected") {
  CHECK_THROWS_AS(MoebiusTransform(1.0, 2.0, 2.0, 4.0), InvalidParameterError);
}
