#pragma once

#include <array>

#include "ahlfors/types.hpp"

namespace ahlfors {

// T(z) = (a z + b) / (c z + d), stored by its four coefficients so that
// composition is coefficient (matrix) arithmetic and derivatives are exact.
class MoebiusTransform {
 public:
  MoebiusTransform(Complex a, Complex b, Complex c, Complex d);

  static MoebiusTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }

  /// z -> (z - p)/(1 - conj(p) z); maps p to 0, fixes the unit circle.
  /// Requires |p| < 1.
  static MoebiusTransform disk_automorphism(Complex p);

  /// z -> (a - z)/(1 - conj(a) z); swaps 0 and a, is an involution.
  /// Requires |a| < 1.
  static MoebiusTransform interchange(Complex a);

  /// z -> e^{i theta} z.
  static MoebiusTransform rotation(double theta);

  /// z -> 1/z.
  static MoebiusTransform inversion() { return {0.0, 1.0, 1.0, 0.0}; }

  Complex operator()(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

  // T'(z) = (ad - bc)/(cz + d)^2
  Complex derivative(Complex z) const;

  /// Value of the limit at z = infinity (= a/c). Requires c != 0.
  Complex at_infinity() const;

  Complex det() const { return a_ * d_ - b_ * c_; }

  /// this after inner: z -> (*this)(inner(z)).
  MoebiusTransform compose(const MoebiusTransform& inner) const;

  MoebiusTransform inverse() const { return {d_, -b_, -c_, a_}; }

  /// s * T for unimodular s (numerator row scaled); used for phase fixes.
  MoebiusTransform scaled(Complex s) const { return {s * a_, s * b_, c_, d_}; }

  std::array<Complex, 4> coefficients() const { return {a_, b_, c_, d_}; }

 private:
  Complex a_, b_, c_, d_;
};

}  // namespace ahlfors
