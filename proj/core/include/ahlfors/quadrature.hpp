#pragma once

#include <vector>

namespace ahlfors {

/// Discretization of an integral over the slit set: one fixed-order
/// Gauss-Legendre rule per interval. Node doubling is the error estimator.
struct QuadratureSpec {
  int nodes_per_interval = 128;
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence. Deterministic for a given n.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  /// Shared per-order instance; node computation is O(n^2), so repeated
  /// evaluations reuse it. Thread-safe.
  static const GaussLegendre& cached(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace ahlfors
