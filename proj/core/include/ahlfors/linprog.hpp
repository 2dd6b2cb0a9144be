#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ahlfors {

/// Deterministic dense revised simplex for
///
///     min c^T y   s.t.   A y = b,   y >= 0,
///
/// used in column form by the cutting-plane solver: the row multipliers of
/// the optimum solve the dual  max b^T x  s.t.  A^T x <= c.
///
/// Pricing is Dantzig's rule with index tie-breaks, falling back to Bland's
/// rule after a run of degenerate pivots; every pivot path is reproducible.
/// Feasibility comes either from a caller-supplied starting basis or from
/// an artificial phase 1.
class SimplexLp {
 public:
  explicit SimplexLp(int rows);

  int rows() const { return n_; }
  int columns() const { return static_cast<int>(costs_.size()); }

  int add_column(const Eigen::VectorXd& column, double cost);
  void set_rhs(const Eigen::VectorXd& b);

  /// Installs a known feasible basis (square, basic values >= 0); solve()
  /// then skips phase 1. Throws InternalError if the basis is singular or
  /// infeasible beyond tolerance.
  void set_starting_basis(const std::vector<int>& basis);

  struct Solution {
    double objective = 0.0;
    Eigen::VectorXd multipliers;  // size rows()
    std::vector<double> y;        // size columns()
    std::vector<int> basis;       // optimal basis column indices
    int pivots = 0;
  };

  Solution solve();

 private:
  struct PhaseResult {
    double objective;
    int pivots;
  };
  Solution solve_once();
  PhaseResult run_phase(int phase);
  void factorize();
  Eigen::VectorXd column_vec(int j) const;
  double cost_of(int j, int phase) const;

  int n_;
  Eigen::MatrixXd a_;
  std::vector<double> costs_;
  Eigen::VectorXd b_;
  std::vector<int> basis_;      // >= 0 real column, -1-i artificial for row i
  std::vector<char> in_basis_;  // per real column
  std::vector<double> art_sign_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  bool have_basis_ = false;
  bool cautious_ = false;
};

}  // namespace ahlfors
