#include "ahlfors/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ahlfors/errors.hpp"

namespace ahlfors {

RealSlitSet::RealSlitSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) {
    throw GeometryError("slit set must contain at least one interval");
  }
  for (const auto& [a, b] : intervals_) {
    if (!(a < b)) {
      throw GeometryError("slit interval must have positive length");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw GeometryError("slit endpoints must be finite");
    }
  }
  std::sort(intervals_.begin(), intervals_.end());
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].first <= intervals_[i - 1].second) {
      throw GeometryError("slit intervals overlap or touch");
    }
  }
}

double RealSlitSet::total_length() const {
  double len = 0.0;
  for (const auto& [a, b] : intervals_) len += b - a;
  return len;
}

bool RealSlitSet::contains(double x) const {
  for (const auto& [a, b] : intervals_) {
    if (x >= a && x <= b) return true;
  }
  return false;
}

double RealSlitSet::distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : intervals_) {
    const double dx = z.real() < a ? a - z.real() : (z.real() > b ? z.real() - b : 0.0);
    best = std::min(best, std::hypot(dx, z.imag()));
  }
  return best;
}

Domain Domain::unit_disk() { return Domain(Variant::UnitDisk); }

Domain Domain::exterior_unit_disk() { return Domain(Variant::ExteriorUnitDisk); }

Domain Domain::circle_domain(Circle outer, std::vector<Circle> holes) {
  if (!(outer.radius > 0.0)) throw GeometryError("outer radius must be positive");
  for (const auto& h : holes) {
    if (!(h.radius > 0.0)) throw GeometryError("hole radius must be positive");
    if (std::abs(h.center - outer.center) + h.radius >= outer.radius) {
      throw GeometryError("hole is not strictly inside the outer circle");
    }
  }
  for (std::size_t i = 0; i < holes.size(); ++i) {
    for (std::size_t j = i + 1; j < holes.size(); ++j) {
      if (std::abs(holes[i].center - holes[j].center) <=
          holes[i].radius + holes[j].radius) {
        throw GeometryError("holes overlap or touch");
      }
    }
  }
  Domain d(Variant::CircleDomain);
  d.outer_ = outer;
  d.holes_ = std::move(holes);
  return d;
}

Domain Domain::real_slit_complement(RealSlitSet slits) {
  Domain d(Variant::RealSlitComplement);
  d.slits_ = std::move(slits);
  return d;
}

const Circle& Domain::outer() const {
  if (variant_ != Variant::CircleDomain) {
    throw InvalidParameterError("outer() requires a circle domain");
  }
  return outer_;
}

const std::vector<Circle>& Domain::holes() const {
  if (variant_ != Variant::CircleDomain) {
    throw InvalidParameterError("holes() requires a circle domain");
  }
  return holes_;
}

const RealSlitSet& Domain::slits() const {
  if (variant_ != Variant::RealSlitComplement) {
    throw InvalidParameterError("slits() requires a real-slit complement");
  }
  return *slits_;
}

bool Domain::contains(Complex z) const {
  switch (variant_) {
    case Variant::UnitDisk:
      return std::abs(z) < 1.0;
    case Variant::ExteriorUnitDisk:
      return std::abs(z) > 1.0;
    case Variant::CircleDomain: {
      if (std::abs(z - outer_.center) >= outer_.radius) return false;
      for (const auto& h : holes_) {
        if (std::abs(z - h.center) <= h.radius) return false;
      }
      return true;
    }
    case Variant::RealSlitComplement:
      if (z.imag() != 0.0) return true;
      return !slits_->contains(z.real());
  }
  return false;
}

bool Domain::contains_infinity() const {
  return variant_ == Variant::ExteriorUnitDisk ||
         variant_ == Variant::RealSlitComplement;
}

bool Domain::contains(const BasePoint& p) const {
  return p.is_infinity() ? contains_infinity() : contains(p.finite_value());
}

bool Domain::in_closure(Complex z, double tol) const {
  switch (variant_) {
    case Variant::UnitDisk:
      return std::abs(z) <= 1.0 + tol;
    case Variant::ExteriorUnitDisk:
      return std::abs(z) >= 1.0 - tol;
    case Variant::CircleDomain: {
      if (std::abs(z - outer_.center) > outer_.radius * (1.0 + tol)) return false;
      for (const auto& h : holes_) {
        if (std::abs(z - h.center) < h.radius * (1.0 - tol)) return false;
      }
      return true;
    }
    case Variant::RealSlitComplement:
      return true;  // the slit is the boundary; the closure is the sphere
  }
  return false;
}

int Domain::num_boundary_components() const {
  switch (variant_) {
    case Variant::UnitDisk:
    case Variant::ExteriorUnitDisk:
      return 1;
    case Variant::CircleDomain:
      return 1 + static_cast<int>(holes_.size());
    case Variant::RealSlitComplement:
      return static_cast<int>(slits_->intervals().size());
  }
  return 0;
}

double Domain::default_slit_offset() const {
  return 1e-3 * slits_->total_length();
}

double Domain::boundary_length(int component) const {
  switch (variant_) {
    case Variant::UnitDisk:
    case Variant::ExteriorUnitDisk:
      return 2.0 * kPi;
    case Variant::CircleDomain:
      return component == 0 ? 2.0 * kPi * outer_.radius
                            : 2.0 * kPi * holes_.at(component - 1).radius;
    case Variant::RealSlitComplement: {
      const auto& [a, b] = slits_->intervals().at(component);
      const double eps = default_slit_offset();
      return 2.0 * (b - a) + 2.0 * kPi * eps;
    }
  }
  return 0.0;
}

namespace {

void append_circle(std::vector<BoundarySample>& out, Complex center, double radius,
                   bool counterclockwise, int n, int component) {
  const double w = 2.0 * kPi * radius / n;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * k / n;
    BoundarySample s;
    s.parameter = theta;
    s.component = component;
    s.weight = w;
    if (counterclockwise) {
      s.point = center + std::polar(radius, theta);
      s.unit_tangent = kI * std::polar(1.0, theta);
    } else {
      s.point = center + std::polar(radius, -theta);
      s.unit_tangent = -kI * std::polar(1.0, -theta);
    }
    out.push_back(s);
  }
}

// Clockwise stadium around [a, b] at offset eps: top segment left-to-right,
// right cap, bottom segment right-to-left, left cap. Winding about the slit
// is -1, which puts the unbounded domain on the left of the traversal.
void append_stadium(std::vector<BoundarySample>& out, double a, double b, double eps,
                    int n, int component) {
  const double seg = b - a;
  const double cap = kPi * eps;
  const double total = 2.0 * seg + 2.0 * cap;
  const double w = total / n;
  for (int k = 0; k < n; ++k) {
    double s = total * k / n;
    BoundarySample bs;
    bs.component = component;
    bs.parameter = static_cast<double>(k) / n;
    bs.weight = w;
    if (s < seg) {
      bs.point = Complex(a + s, eps);
      bs.unit_tangent = Complex(1.0, 0.0);
    } else if (s < seg + cap) {
      const double theta = kPi / 2.0 - (s - seg) / eps;
      bs.point = Complex(b, 0.0) + std::polar(eps, theta);
      bs.unit_tangent = -kI * std::polar(1.0, theta);
    } else if (s < 2.0 * seg + cap) {
      const double t = s - seg - cap;
      bs.point = Complex(b - t, -eps);
      bs.unit_tangent = Complex(-1.0, 0.0);
    } else {
      const double theta = -kPi / 2.0 - (s - 2.0 * seg - cap) / eps;
      bs.point = Complex(a, 0.0) + std::polar(eps, theta);
      bs.unit_tangent = -kI * std::polar(1.0, theta);
    }
    out.push_back(bs);
  }
}

}  // namespace

std::vector<BoundarySample> sample_boundary(const Domain& domain, int n) {
  const double offset = domain.variant() == Domain::Variant::RealSlitComplement
                            ? domain.default_slit_offset()
                            : 0.0;
  return sample_boundary(domain, n, offset);
}

std::vector<BoundarySample> sample_boundary(const Domain& domain, int n,
                                            double slit_offset) {
  if (n < 8) {
    throw TooFewSamplesError("sample_boundary requires at least 8 samples per component");
  }
  std::vector<BoundarySample> out;
  switch (domain.variant()) {
    case Domain::Variant::UnitDisk:
      append_circle(out, {0, 0}, 1.0, true, n, 0);
      break;
    case Domain::Variant::ExteriorUnitDisk:
      append_circle(out, {0, 0}, 1.0, false, n, 0);
      break;
    case Domain::Variant::CircleDomain: {
      append_circle(out, domain.outer().center, domain.outer().radius, true, n, 0);
      int comp = 1;
      for (const auto& h : domain.holes()) {
        append_circle(out, h.center, h.radius, false, n, comp++);
      }
      break;
    }
    case Domain::Variant::RealSlitComplement: {
      if (!(slit_offset > 0.0)) {
        throw InvalidParameterError("slit contour offset must be positive");
      }
      int comp = 0;
      for (const auto& [a, b] : domain.slits().intervals()) {
        append_stadium(out, a, b, slit_offset, n, comp++);
      }
      break;
    }
  }
  return out;
}

std::vector<Complex> boundary_refined_mesh(const Domain& domain, int angular,
                                           int max_k) {
  std::vector<Complex> pts;
  auto rings_toward = [&](Complex center, double radius, bool inward) {
    for (int k = 1; k <= max_k; ++k) {
      const double f = std::ldexp(1.0, -k);  // 2^-k
      const double r = inward ? radius * (1.0 - f) : radius * (1.0 + f);
      for (int j = 0; j < angular; ++j) {
        const Complex z = center + std::polar(r, 2.0 * kPi * j / angular);
        if (domain.contains(z)) pts.push_back(z);
      }
    }
  };
  switch (domain.variant()) {
    case Domain::Variant::UnitDisk:
      pts.push_back({0, 0});
      rings_toward({0, 0}, 1.0, true);
      break;
    case Domain::Variant::ExteriorUnitDisk: {
      rings_toward({0, 0}, 1.0, false);
      for (double r : {3.0, 6.0, 12.0, 25.0, 50.0, 100.0}) {
        for (int j = 0; j < angular; ++j) {
          pts.push_back(std::polar(r, 2.0 * kPi * j / angular));
        }
      }
      break;
    }
    case Domain::Variant::CircleDomain: {
      rings_toward(domain.outer().center, domain.outer().radius, true);
      for (const auto& h : domain.holes()) rings_toward(h.center, h.radius, false);
      for (const Complex& z : uniform_mesh(domain, 32)) pts.push_back(z);
      break;
    }
    case Domain::Variant::RealSlitComplement: {
      const double lambda = domain.slits().total_length();
      for (int k = 3; k <= max_k; ++k) {
        const double eps = lambda * std::ldexp(1.0, -k);
        for (const auto& s : sample_boundary(domain, std::max(8, angular), eps)) {
          if (domain.contains(s.point)) pts.push_back(s.point);
        }
        // Real-axis points just past the endpoints; preimages of radial
        // rays through +-1 live here.
        for (const auto& [a, b] : domain.slits().intervals()) {
          if (domain.contains(Complex(a - eps, 0.0))) pts.push_back(Complex(a - eps, 0.0));
          if (domain.contains(Complex(b + eps, 0.0))) pts.push_back(Complex(b + eps, 0.0));
        }
      }
      const auto& iv = domain.slits().intervals();
      const double lo = iv.front().first, hi = iv.back().second;
      const double span = std::max(hi - lo, lambda);
      for (int j = 0; j < angular; ++j) {
        pts.push_back(Complex((lo + hi) / 2.0, 0.0) +
                      std::polar(1.5 * span, 2.0 * kPi * j / angular));
      }
      break;
    }
  }
  return pts;
}

std::vector<Complex> uniform_mesh(const Domain& domain, int resolution) {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  switch (domain.variant()) {
    case Domain::Variant::UnitDisk:
      break;
    case Domain::Variant::ExteriorUnitDisk:
      x0 = y0 = -4.0;
      x1 = y1 = 4.0;
      break;
    case Domain::Variant::CircleDomain: {
      const auto& o = domain.outer();
      x0 = o.center.real() - o.radius;
      x1 = o.center.real() + o.radius;
      y0 = o.center.imag() - o.radius;
      y1 = o.center.imag() + o.radius;
      break;
    }
    case Domain::Variant::RealSlitComplement: {
      const auto& iv = domain.slits().intervals();
      const double span = std::max(iv.back().second - iv.front().first, 1.0);
      x0 = iv.front().first - span;
      x1 = iv.back().second + span;
      y0 = -span;
      y1 = span;
      break;
    }
  }
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const Complex z(x0 + (x1 - x0) * (i + 0.5) / resolution,
                      y0 + (y1 - y0) * (j + 0.5) / resolution);
      if (domain.contains(z)) pts.push_back(z);
    }
  }
  return pts;
}

}  // namespace ahlfors
