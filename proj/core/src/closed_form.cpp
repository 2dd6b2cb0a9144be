#include "ahlfors/closed_form.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "ahlfors/errors.hpp"

namespace ahlfors {

const MoebiusTransform& AhlforsClosedForm::moebius() const {
  if (!moebius_) throw InvalidParameterError("closed form has no rational representation");
  return *moebius_;
}

const RealSlitSet& AhlforsClosedForm::slits() const {
  if (!slits_) throw InvalidParameterError("closed form is not of real-slit kind");
  return *slits_;
}

const QuadratureSpec& AhlforsClosedForm::quadrature() const { return quad_; }

AhlforsClosedForm ahlfors_disk(Complex p) {
  const auto t = MoebiusTransform::disk_automorphism(p);  // validates |p| < 1
  const double gamma = 1.0 / (1.0 - std::norm(p));
  AhlforsClosedForm f(AhlforsClosedForm::Kind::DiskMoebius, BasePoint::at(p), gamma,
                      to_analytic(t));
  f.moebius_ = std::make_shared<MoebiusTransform>(t);
  return f;
}

AhlforsClosedForm ahlfors_exterior_disk(Complex p) {
  if (std::abs(p) <= 1.0) {
    throw InvalidParameterError("ahlfors_exterior_disk requires |p| > 1");
  }
  // T_q(1/z) with q = 1/p sends p to 0 and keeps the unit circle; the
  // rotation below fixes the phase.
  const Complex q = 1.0 / p;
  MoebiusTransform t =
      MoebiusTransform::disk_automorphism(q).compose(MoebiusTransform::inversion());
  // Rotate so that F'(p) is real positive (the Riemann-map convention).
  const Complex dp = t.derivative(p);
  t = t.scaled(std::conj(dp) / std::abs(dp));
  const double gamma = 1.0 / (std::norm(p) - 1.0);
  AhlforsClosedForm f(AhlforsClosedForm::Kind::ExteriorDiskRational, BasePoint::at(p),
                      gamma, to_analytic(t));
  f.moebius_ = std::make_shared<MoebiusTransform>(t);
  return f;
}

namespace {

struct SlitQuadrature {
  std::vector<double> nodes;    // over all intervals
  std::vector<double> weights;  // premultiplied by interval half-lengths
};

SlitQuadrature build_slit_quadrature(const RealSlitSet& slits, const QuadratureSpec& q) {
  if (q.nodes_per_interval < 4) {
    throw InvalidParameterError("nodes_per_interval must be >= 4");
  }
  const GaussLegendre& rule = GaussLegendre::cached(q.nodes_per_interval);
  SlitQuadrature sq;
  for (const auto& [a, b] : slits.intervals()) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < rule.size(); ++i) {
      sq.nodes.push_back(mid + half * rule.nodes()[i]);
      sq.weights.push_back(half * rule.weights()[i]);
    }
  }
  return sq;
}

Complex strip_map_quadrature(const SlitQuadrature& sq, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < sq.nodes.size(); ++i) {
    acc += sq.weights[i] / (z - sq.nodes[i]);
  }
  return 0.5 * acc;
}

Complex strip_map_derivative(const SlitQuadrature& sq, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < sq.nodes.size(); ++i) {
    const Complex d = z - sq.nodes[i];
    acc += sq.weights[i] / (d * d);
  }
  return -0.5 * acc;
}

void check_slit_distance(const RealSlitSet& slits, Complex z) {
  const double floor = 1e-9 * slits.total_length();
  if (slits.distance(z) < floor) {
    throw NearSingularityError("evaluation point is within the slit proximity floor");
  }
}

}  // namespace

Complex strip_map(const RealSlitSet& slits, Complex z, const QuadratureSpec& q) {
  check_slit_distance(slits, z);
  return strip_map_quadrature(build_slit_quadrature(slits, q), z);
}

AhlforsClosedForm ahlfors_real_slit(const RealSlitSet& slits, const QuadratureSpec& q) {
  auto sq = std::make_shared<SlitQuadrature>(build_slit_quadrature(slits, q));
  auto sl = std::make_shared<RealSlitSet>(slits);

  AnalyticFunction fn;
  fn.value = [sq, sl](Complex z) {
    check_slit_distance(*sl, z);
    return std::tanh(0.5 * strip_map_quadrature(*sq, z));
  };
  // F = tanh(h/2)  =>  F' = h' / (2 cosh^2(h/2))
  fn.derivative = [sq, sl](Complex z) {
    check_slit_distance(*sl, z);
    const Complex h = strip_map_quadrature(*sq, z);
    const Complex ch = std::cosh(0.5 * h);
    return strip_map_derivative(*sq, z) / (2.0 * ch * ch);
  };
  fn.at_infinity = Complex{0.0, 0.0};

  const double gamma = slits.total_length() / 4.0;
  AhlforsClosedForm f(AhlforsClosedForm::Kind::RealSlit, BasePoint::infinity(), gamma,
                      std::move(fn));
  f.slits_ = sl;
  f.quad_ = q;
  return f;
}

double capacity_real_slit(const RealSlitSet& slits) {
  return slits.total_length() / 4.0;
}

Complex derivative_at_infinity(const AnalyticFunction& f, double initial_radius,
                               int samples) {
  if (!f.at_infinity) {
    throw InvalidParameterError("derivative_at_infinity requires a value at infinity");
  }
  const Complex f_inf = *f.at_infinity;
  auto contour = [&](double radius) {
    // (1/2 pi i) contour integral of (f - f(inf)) dz = (R/N) sum (f - f_inf) e^{i t_k}
    Complex acc{0.0, 0.0};
    for (int k = 0; k < samples; ++k) {
      const Complex e = std::polar(1.0, 2.0 * kPi * k / samples);
      acc += (f.value(radius * e) - f_inf) * e;
    }
    return acc * (radius / samples);
  };
  double radius = initial_radius;
  Complex prev = contour(radius);
  for (int step = 0; step < 6; ++step) {
    radius *= 2.0;
    const Complex cur = contour(radius);
    if (std::abs(cur - prev) <= 1e-9 * std::max(1.0, std::abs(cur))) {
      return cur;
    }
    prev = cur;
  }
  throw NumericalInstabilityError(
      "derivative_at_infinity did not settle across contour radii");
}

}  // namespace ahlfors
