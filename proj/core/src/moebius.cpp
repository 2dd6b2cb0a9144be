#include "ahlfors/moebius.hpp"

#include <cmath>

#include "ahlfors/errors.hpp"

namespace ahlfors {

MoebiusTransform::MoebiusTransform(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(det()) == 0.0) {
    throw InvalidParameterError("degenerate Moebius transform: a*d - b*c = 0");
  }
}

MoebiusTransform MoebiusTransform::disk_automorphism(Complex p) {
  if (std::abs(p) >= 1.0) {
    throw InvalidParameterError("disk_automorphism requires |p| < 1");
  }
  return {1.0, -p, -std::conj(p), 1.0};
}

MoebiusTransform MoebiusTransform::interchange(Complex a) {
  if (std::abs(a) >= 1.0) {
    throw InvalidParameterError("interchange requires |a| < 1");
  }
  return {-1.0, a, -std::conj(a), 1.0};
}

MoebiusTransform MoebiusTransform::rotation(double theta) {
  return {std::polar(1.0, theta), 0.0, 0.0, 1.0};
}

Complex MoebiusTransform::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  return det() / (den * den);
}

Complex MoebiusTransform::at_infinity() const {
  if (std::abs(c_) == 0.0) {
    throw InvalidParameterError("Moebius transform has a pole at infinity");
  }
  return a_ / c_;
}

MoebiusTransform MoebiusTransform::compose(const MoebiusTransform& g) const {
  return {a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_,
          c_ * g.a_ + d_ * g.c_, c_ * g.b_ + d_ * g.d_};
}

}  // namespace ahlfors
