#pragma once

#include <complex>
#include <optional>

#include "ahlfors/errors.hpp"

namespace ahlfors {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

/// A point of the Riemann sphere used as the base point of the extremal
/// problem: either a finite complex number or the point at infinity.
class BasePoint {
 public:
  static BasePoint at(Complex z) { return BasePoint(z, false); }
  static BasePoint infinity() { return BasePoint(Complex{0, 0}, true); }

  bool is_infinity() const { return infinite_; }
  Complex finite_value() const {
    if (infinite_) throw InvalidParameterError("base point is infinite");
    return value_;
  }

  friend bool operator==(const BasePoint& a, const BasePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  BasePoint(Complex z, bool infinite) : value_(z), infinite_(infinite) {}
  Complex value_;
  bool infinite_;
};

}  // namespace ahlfors
