#include "ahlfors/basis.hpp"

#include <cmath>

#include "ahlfors/errors.hpp"

namespace ahlfors {

RationalBasis::RationalBasis(const Domain& domain, const BasisSpec& spec,
                             const BasePoint& p)
    : base_(p) {
  if (spec.polynomial_degree < 0 || spec.hole_depth < 0) {
    throw InvalidParameterError("basis degrees must be nonnegative");
  }
  switch (domain.variant()) {
    case Domain::Variant::UnitDisk: {
      if (p.is_infinity()) throw InvalidParameterError("unit disk has no point at infinity");
      for (int k = 0; k <= spec.polynomial_degree; ++k) {
        terms_.push_back({Complex{0, 0}, 1.0, k});
      }
      break;
    }
    case Domain::Variant::CircleDomain: {
      if (p.is_infinity()) throw InvalidParameterError("circle domain has no point at infinity");
      const auto& outer = domain.outer();
      for (int k = 0; k <= spec.polynomial_degree; ++k) {
        terms_.push_back({outer.center, outer.radius, k});
      }
      for (const auto& hole : domain.holes()) {
        for (int k = 1; k <= spec.hole_depth; ++k) {
          terms_.push_back({hole.center, hole.radius, -k});
        }
      }
      break;
    }
    case Domain::Variant::ExteriorUnitDisk: {
      if (!p.is_infinity()) {
        terms_.push_back({Complex{0, 0}, 1.0, 0});  // constant; no f(inf)=0 pin
      }
      for (int k = 1; k <= spec.hole_depth; ++k) {
        terms_.push_back({Complex{0, 0}, 1.0, -k});
      }
      break;
    }
    case Domain::Variant::RealSlitComplement:
      throw UnsupportedVariantError(
          "real-slit domains use the closed form, not the basis solver");
  }
  if (dimension() < 2) {
    throw InvalidParameterError("basis dimension must be at least 2");
  }
}

Complex RationalBasis::eval(int j, Complex z) const {
  const Term& t = terms_[j];
  if (t.power >= 0) {
    return std::pow((z - t.center) / t.scale, t.power);
  }
  return std::pow(t.scale / (z - t.center), -t.power);
}

Complex RationalBasis::deriv(int j, Complex z) const {
  const Term& t = terms_[j];
  if (t.power == 0) return {0.0, 0.0};
  if (t.power > 0) {
    return (static_cast<double>(t.power) / t.scale) *
           std::pow((z - t.center) / t.scale, t.power - 1);
  }
  const int k = -t.power;
  return (-static_cast<double>(k) / t.scale) *
         std::pow(t.scale / (z - t.center), k + 1);
}

Complex RationalBasis::evaluate(std::span<const Complex> coeffs, Complex z) const {
  Complex acc{0.0, 0.0};
  for (int j = 0; j < dimension(); ++j) acc += coeffs[j] * eval(j, z);
  return acc;
}

Complex RationalBasis::evaluate_derivative(std::span<const Complex> coeffs,
                                           Complex z) const {
  Complex acc{0.0, 0.0};
  for (int j = 0; j < dimension(); ++j) acc += coeffs[j] * deriv(j, z);
  return acc;
}

Eigen::MatrixXcd RationalBasis::eval_matrix(std::span<const Complex> points) const {
  Eigen::MatrixXcd m(points.size(), dimension());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < dimension(); ++j) m(i, j) = eval(j, points[i]);
  }
  return m;
}

Eigen::VectorXcd RationalBasis::derivative_at_base() const {
  Eigen::VectorXcd d(dimension());
  if (!base_.is_infinity()) {
    const Complex p = base_.finite_value();
    for (int j = 0; j < dimension(); ++j) d(j) = deriv(j, p);
    return d;
  }
  // Derivative at infinity as the 1/z coefficient, via the contour form
  // (1/2 pi i) int (phi_j - phi_j(inf)) dz on |z - center| = 4 * scale.
  const int samples = 256;
  for (int j = 0; j < dimension(); ++j) {
    const Term& t = terms_[j];
    if (t.power >= 0) {
      throw InvalidParameterError("basis term unbounded at infinity with p = inf");
    }
    const double radius = 4.0 * t.scale;
    Complex acc{0.0, 0.0};
    for (int k = 0; k < samples; ++k) {
      const Complex e = std::polar(1.0, 2.0 * kPi * k / samples);
      acc += eval(j, t.center + radius * e) * e;
    }
    d(j) = acc * (radius / samples);
  }
  return d;
}

}  // namespace ahlfors
