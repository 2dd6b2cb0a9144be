#pragma once

#include <span>

#include "ahlfors/analytic.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

/// One step of the square-root expansion trick: given f mapping the domain
/// into the unit disk with f(base_point) = 0 and an omitted value `omitted`
/// in the disk, build
///
///     H = h_b o sqrt o h_a o f,   a = omitted, b = sqrt(a),
///
/// where h_a, h_b interchange 0 with a resp. b and sqrt uses the branch
/// whose value at a has nonnegative real part. H keeps H(base_point) = 0,
/// stays bounded by 1, and |H'(base_point)| exceeds |f'(base_point)| by the
/// factor (1+|a|)/(2 sqrt(|a|)) > 1.
///
/// "omitted" is checked on the supplied domain samples: if some |f(z) - a|
/// falls below omitted_tolerance a PreconditionError is thrown. The check is
/// a finite-grid detector, not a certificate.
AnalyticFunction koebe_expand(const AnalyticFunction& f, Complex omitted,
                              Complex base_point,
                              std::span<const Complex> domain_samples,
                              double omitted_tolerance = 1e-6);

}  // namespace ahlfors
