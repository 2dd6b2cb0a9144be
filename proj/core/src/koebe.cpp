#include "ahlfors/koebe.hpp"

#include <cmath>

#include "ahlfors/branch.hpp"
#include "ahlfors/errors.hpp"
#include "ahlfors/moebius.hpp"

namespace ahlfors {

AnalyticFunction koebe_expand(const AnalyticFunction& f, Complex omitted,
                              Complex base_point,
                              std::span<const Complex> domain_samples,
                              double omitted_tolerance) {
  if (std::abs(omitted) >= 1.0) {
    throw InvalidParameterError("koebe_expand: omitted value must lie in the unit disk");
  }
  if (std::abs(f(base_point)) > 1e-9) {
    throw PreconditionError("koebe_expand: f(base_point) != 0");
  }
  for (std::size_t i = 0; i < domain_samples.size(); ++i) {
    const Complex w = f(domain_samples[i]);
    if (std::abs(w) > 1.0 + 1e-9) {
      throw PreconditionError("koebe_expand: |f| exceeds 1 on the sample grid");
    }
    if (std::abs(w - omitted) <= omitted_tolerance) {
      throw PreconditionError("koebe_expand: omitted value attained on the sample grid");
    }
  }

  const Complex a = omitted;
  const Complex b = sqrt_branch(a, a);
  const auto ha = MoebiusTransform::interchange(a);
  const auto hb = MoebiusTransform::interchange(b);

  AnalyticFunction h;
  h.value = [fv = f.value, a, ha, hb](Complex z) {
    return hb(sqrt_branch(ha(fv(z)), a));
  };
  h.derivative = [fv = f.value, fd = f.derivative, a, ha, hb](Complex z) {
    const Complex w = fv(z);
    const Complex r = sqrt_branch(ha(w), a);
    return hb.derivative(r) * (1.0 / (2.0 * r)) * ha.derivative(w) * fd(z);
  };
  return h;
}

}  // namespace ahlfors
