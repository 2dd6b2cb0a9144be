#pragma once

#include <memory>

#include "ahlfors/analytic.hpp"
#include "ahlfors/domain.hpp"
#include "ahlfors/moebius.hpp"
#include "ahlfors/quadrature.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

/// An Ahlfors function given in closed form, together with the extremal
/// derivative value gamma and its base point. The function vanishes at the
/// base point and is normalized so the derivative there is real positive.
class AhlforsClosedForm {
 public:
  enum class Kind { DiskMoebius, ExteriorDiskRational, RealSlit };

  Kind kind() const { return kind_; }
  const BasePoint& base_point() const { return base_point_; }
  double gamma() const { return gamma_; }

  /// The rational map for the disk and exterior-disk kinds.
  const MoebiusTransform& moebius() const;
  const RealSlitSet& slits() const;
  const QuadratureSpec& quadrature() const;

  AnalyticFunction function() const { return fn_; }
  Complex operator()(Complex z) const { return fn_.value(z); }

 private:
  friend AhlforsClosedForm ahlfors_disk(Complex);
  friend AhlforsClosedForm ahlfors_exterior_disk(Complex);
  friend AhlforsClosedForm ahlfors_real_slit(const RealSlitSet&, const QuadratureSpec&);

  AhlforsClosedForm(Kind k, BasePoint p, double gamma, AnalyticFunction fn)
      : kind_(k), base_point_(p), gamma_(gamma), fn_(std::move(fn)) {}

  Kind kind_;
  BasePoint base_point_;
  double gamma_;
  AnalyticFunction fn_;
  std::shared_ptr<MoebiusTransform> moebius_;
  std::shared_ptr<RealSlitSet> slits_;
  QuadratureSpec quad_{};
};

/// F(z) = (z - p)/(1 - conj(p) z) on the unit disk; gamma = 1/(1 - |p|^2).
AhlforsClosedForm ahlfors_disk(Complex p);

/// Exterior of the closed unit disk, finite base point |p| > 1. Built by
/// composing the disk automorphism vanishing at 1/p with z -> 1/z and
/// rotating so F'(p) > 0; for p = 2 this reduces to (z - 2)/(2z - 1).
/// gamma = 1/(|p|^2 - 1).
AhlforsClosedForm ahlfors_exterior_disk(Complex p);

/// Discretized Cauchy-type integral h(z) = (1/2) * int_E dt/(z - t), one
/// Gauss-Legendre rule per interval. |Im h| < pi/2 off the slit.
/// Throws NearSingularityError when dist(z, E) < 1e-9 * lambda(E).
Complex strip_map(const RealSlitSet& slits, Complex z, const QuadratureSpec& q = {});

/// F(z) = (e^h - 1)/(e^h + 1) = tanh(h(z)/2) for the complement of a real
/// slit set, base point infinity; gamma = lambda(E)/4 exactly.
AhlforsClosedForm ahlfors_real_slit(const RealSlitSet& slits,
                                    const QuadratureSpec& q = {});

/// Analytic capacity of a compact real slit set: lambda(E)/4.
double capacity_real_slit(const RealSlitSet& slits);

/// f'(inf) = lim z (f(z) - f(inf)), computed as the 1/z coefficient by a
/// trapezoidal contour integral over |z| = R with R doubled until two
/// consecutive values agree. Requires f.at_infinity.
/// Throws NumericalInstabilityError if the values never settle.
Complex derivative_at_infinity(const AnalyticFunction& f, double initial_radius = 4.0,
                               int samples = 256);

}  // namespace ahlfors
