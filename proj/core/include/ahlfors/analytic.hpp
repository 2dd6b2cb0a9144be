#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "ahlfors/moebius.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

/// A represented analytic function: pointwise evaluator, analytic derivative,
/// and (when the function extends there) its value at infinity.
struct AnalyticFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
  std::optional<Complex> at_infinity{};

  Complex operator()(Complex z) const { return value(z); }
};

inline AnalyticFunction to_analytic(const MoebiusTransform& t) {
  AnalyticFunction f;
  f.value = [t](Complex z) { return t(z); };
  f.derivative = [t](Complex z) { return t.derivative(z); };
  const auto co = t.coefficients();
  if (std::abs(co[2]) > 0.0) f.at_infinity = co[0] / co[2];
  return f;
}

/// outer(inner(z)) with the chain-rule derivative.
inline AnalyticFunction compose(AnalyticFunction outer, AnalyticFunction inner) {
  AnalyticFunction f;
  f.value = [o = outer.value, i = inner.value](Complex z) { return o(i(z)); };
  f.derivative = [od = outer.derivative, iv = inner.value,
                  id = inner.derivative](Complex z) {
    return od(iv(z)) * id(z);
  };
  if (inner.at_infinity) f.at_infinity = outer.value(*inner.at_infinity);
  return f;
}

}  // namespace ahlfors
