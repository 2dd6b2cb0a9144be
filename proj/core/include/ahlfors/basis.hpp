#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ahlfors/domain.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

/// Finite-dimensional truncation of H^inf used by the extremal solver:
/// powers of (z - z0) up to polynomial_degree (bounded domains), plus
/// negative powers per hole up to hole_depth. For the exterior disk the
/// basis is negative powers of z; the constant is included only for a
/// finite base point, since f(inf) = 0 pins it otherwise.
struct BasisSpec {
  int polynomial_degree = 12;
  int hole_depth = 12;
};

class RationalBasis {
 public:
  /// Throws UnsupportedVariantError for real-slit domains (those have a
  /// closed form; the solver is not needed).
  RationalBasis(const Domain& domain, const BasisSpec& spec, const BasePoint& p);

  int dimension() const { return static_cast<int>(terms_.size()); }
  const BasePoint& base_point() const { return base_; }

  Complex eval(int j, Complex z) const;
  Complex deriv(int j, Complex z) const;

  Complex evaluate(std::span<const Complex> coeffs, Complex z) const;
  Complex evaluate_derivative(std::span<const Complex> coeffs, Complex z) const;

  /// Rows = points, columns = basis terms.
  Eigen::MatrixXcd eval_matrix(std::span<const Complex> points) const;

  /// The linear functional c -> h'(p) as a vector of per-term values; for
  /// p = inf this is the per-term derivative at infinity obtained from the
  /// contour form of the 1/z coefficient.
  Eigen::VectorXcd derivative_at_base() const;

  struct Term {
    Complex center;
    double scale;  // power of ((z-center)/scale) or (scale/(z-center))
    int power;     // >= 0: ((z-center)/scale)^power; < 0: (scale/(z-center))^-power
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  BasePoint base_;
};

}  // namespace ahlfors
