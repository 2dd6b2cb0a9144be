#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ahlfors/types.hpp"

namespace ahlfors {

struct Circle {
  Complex center;
  double radius;
};

/// A finite union of disjoint closed intervals of the real line, kept sorted.
class RealSlitSet {
 public:
  explicit RealSlitSet(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }
  double total_length() const;     // lambda(E)
  bool contains(double x) const;   // closed-interval membership
  double distance(Complex z) const;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// The domains the toolkit computes on. Instances are validated on
/// construction and immutable afterwards.
class Domain {
 public:
  enum class Variant { UnitDisk, ExteriorUnitDisk, CircleDomain, RealSlitComplement };

  static Domain unit_disk();
  static Domain exterior_unit_disk();
  static Domain circle_domain(Circle outer, std::vector<Circle> holes);
  static Domain real_slit_complement(RealSlitSet slits);

  Variant variant() const { return variant_; }
  const Circle& outer() const;
  const std::vector<Circle>& holes() const;
  const RealSlitSet& slits() const;

  /// Open-set membership; boundary points answer false.
  bool contains(Complex z) const;
  bool contains_infinity() const;
  bool contains(const BasePoint& p) const;
  /// Membership in the closure, with a relative tolerance for points that
  /// sit on a boundary circle up to rounding.
  bool in_closure(Complex z, double tol = 1e-9) const;

  int num_boundary_components() const;
  double boundary_length(int component) const;
  /// Offset used for slit stadium contours: 1e-3 * lambda(E).
  double default_slit_offset() const;

 private:
  Domain(Variant v) : variant_(v) {}
  Variant variant_;
  Circle outer_{Complex{0, 0}, 1.0};
  std::vector<Circle> holes_;
  std::optional<RealSlitSet> slits_;
};

/// One node of a discretized boundary: position, traversal direction (domain
/// on the left: outer circles counterclockwise, holes and slit stadiums
/// clockwise), and its arc-length quadrature weight.
struct BoundarySample {
  Complex point;
  Complex unit_tangent;
  double weight;
  int component;
  double parameter;  // angle for circles, normalized arc length for stadiums
};

/// n samples per boundary component, equispaced in the curve parameter.
/// Throws TooFewSamplesError for n < 8. Slit boundaries are replaced by
/// stadium contours at the given offset (default 1e-3 * lambda(E)).
std::vector<BoundarySample> sample_boundary(const Domain& domain, int n_per_component);
std::vector<BoundarySample> sample_boundary(const Domain& domain, int n_per_component,
                                            double slit_offset);

/// Interior points concentrated geometrically toward the boundary
/// (distances ~ scale * 2^-k, k = 1..max_k), for sup-norm estimation.
std::vector<Complex> boundary_refined_mesh(const Domain& domain, int angular,
                                           int max_k = 14);

/// Uniform grid over a bounding window intersected with the domain.
std::vector<Complex> uniform_mesh(const Domain& domain, int resolution);

}  // namespace ahlfors
