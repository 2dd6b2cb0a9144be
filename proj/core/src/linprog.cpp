#include "ahlfors/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahlfors/errors.hpp"

namespace ahlfors {

namespace {
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kRatioTieTol = 1e-9;
constexpr int kRefactorEvery = 8;
constexpr int kDegenerateRunForBland = 40;
constexpr int kPivotBudget = 200000;
}  // namespace

SimplexLp::SimplexLp(int rows) : n_(rows) {
  if (rows < 1) throw InvalidParameterError("SimplexLp needs at least one row");
  a_.resize(n_, 64);
  b_ = Eigen::VectorXd::Zero(n_);
}

int SimplexLp::add_column(const Eigen::VectorXd& column, double cost) {
  if (column.size() != n_) throw InvalidParameterError("column size mismatch");
  const int j = columns();
  if (j == a_.cols()) {
    Eigen::MatrixXd grown(n_, a_.cols() * 2);
    grown.leftCols(a_.cols()) = a_;
    a_.swap(grown);
  }
  a_.col(j) = column;
  costs_.push_back(cost);
  in_basis_.push_back(0);
  return j;
}

void SimplexLp::set_rhs(const Eigen::VectorXd& b) {
  if (b.size() != n_) throw InvalidParameterError("rhs size mismatch");
  b_ = b;
  have_basis_ = false;
}

void SimplexLp::set_starting_basis(const std::vector<int>& basis) {
  if (static_cast<int>(basis.size()) != n_) {
    throw InvalidParameterError("starting basis must have one column per row");
  }
  for (int j : basis) {
    if (j < 0 || j >= columns()) {
      throw InvalidParameterError("starting basis references a missing column");
    }
  }
  basis_ = basis;
  std::fill(in_basis_.begin(), in_basis_.end(), 0);
  for (int j : basis_) in_basis_[j] = 1;
  art_sign_.assign(n_, 1.0);
  factorize();
  if (xb_.minCoeff() < -1e-7 * (1.0 + b_.cwiseAbs().maxCoeff())) {
    throw InternalError("starting basis is not feasible");
  }
  // Clamp tiny negatives from rounding.
  for (int i = 0; i < n_; ++i) xb_(i) = std::max(xb_(i), 0.0);
  have_basis_ = true;
}

double SimplexLp::cost_of(int j, int phase) const {
  if (j < 0) return phase == 1 ? 1.0 : 1e8;  // artificials pinned in phase 2
  return phase == 1 ? 0.0 : costs_[j];
}

Eigen::VectorXd SimplexLp::column_vec(int j) const {
  if (j >= 0) return a_.col(j);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
  e(-1 - j) = art_sign_[-1 - j];
  return e;
}

void SimplexLp::factorize() {
  Eigen::MatrixXd basis_matrix(n_, n_);
  for (int i = 0; i < n_; ++i) basis_matrix.col(i) = column_vec(basis_[i]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
  lu.setThreshold(1e-18);
  if (!lu.isInvertible()) {
    throw InternalError("simplex basis became singular");
  }
  binv_ = lu.inverse();
  xb_ = binv_ * b_;
}

SimplexLp::PhaseResult SimplexLp::run_phase(int phase) {
  const int m = columns();
  Eigen::VectorXd cb(n_);
  int pivots = 0;
  int degenerate_run = 0;

  while (true) {
    for (int i = 0; i < n_; ++i) cb(i) = cost_of(basis_[i], phase);
    const Eigen::VectorXd pi = binv_.transpose() * cb;

    // Pricing: Dantzig with index tie-break, Bland after a degenerate run.
    // The tolerance scales with the multipliers so rounding noise cannot
    // drag a nearly parallel column into the basis.
    const bool bland = cautious_ || degenerate_run >= kDegenerateRunForBland;
    const double tol = kReducedCostTol * (1.0 + pi.cwiseAbs().maxCoeff());
    int entering = -1;
    double best = -tol;
    for (int j = 0; j < m; ++j) {
      if (in_basis_[j]) continue;
      const double r = cost_of(j, phase) - pi.dot(a_.col(j));
      if (r < best) {
        entering = j;
        if (bland) break;
        best = r;
      }
    }
    if (entering == -1) {
      double obj = 0.0;
      for (int i = 0; i < n_; ++i) obj += cost_of(basis_[i], phase) * xb_(i);
      return {obj, pivots};
    }

    const Eigen::VectorXd d = binv_ * a_.col(entering);
    int leave = -1;
    double t = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) {
      if (d(i) > kPivotTol) {
        const double ratio = xb_(i) / d(i);
        if (leave == -1 || ratio < t - kRatioTieTol * (1.0 + std::abs(t))) {
          t = ratio;
          leave = i;
        } else if (ratio <= t + kRatioTieTol * (1.0 + std::abs(t))) {
          // Tie: prefer kicking artificials out, then the smaller identifier.
          const bool cand_art = basis_[i] < 0, cur_art = basis_[leave] < 0;
          if (cand_art != cur_art ? cand_art : basis_[i] < basis_[leave]) {
            leave = i;
          }
        }
      }
    }
    if (leave == -1) {
      throw InternalError("simplex phase is unbounded");
    }

    degenerate_run = (t <= kRatioTieTol) ? degenerate_run + 1 : 0;

    // Pivot. Inverse rows: r_l' = r_l / d_l,  r_i' = r_i - d_i * r_l'.
    xb_ -= t * d;
    xb_(leave) = t;
    if (basis_[leave] >= 0) in_basis_[basis_[leave]] = 0;
    basis_[leave] = entering;
    in_basis_[entering] = 1;
    binv_.row(leave) /= d(leave);
    for (int i = 0; i < n_; ++i) {
      if (i != leave && d(i) != 0.0) {
        binv_.row(i) -= d(i) * binv_.row(leave);
      }
    }
    ++pivots;
    if (cautious_ || pivots % kRefactorEvery == 0) factorize();
    if (pivots > kPivotBudget) {
      throw InternalError("simplex exceeded its pivot budget");
    }
  }
}

SimplexLp::Solution SimplexLp::solve() {
  cautious_ = false;
  for (int attempt = 0;; ++attempt) {
    try {
      return solve_once();
    } catch (const InternalError&) {
      // One recovery pass per call: restart from artificials with Bland
      // pricing and per-pivot refactorization. Slower but immune to the
      // degenerate numerics that can wedge the fast path.
      if (attempt >= 1) throw;
      have_basis_ = false;
      cautious_ = true;
    }
  }
}

SimplexLp::Solution SimplexLp::solve_once() {
  const int m = columns();
  if (m == 0) throw InternalError("simplex called with no columns");

  int total_pivots = 0;
  if (!have_basis_) {
    art_sign_.assign(n_, 1.0);
    basis_.resize(n_);
    std::fill(in_basis_.begin(), in_basis_.end(), 0);
    for (int i = 0; i < n_; ++i) {
      art_sign_[i] = b_(i) >= 0.0 ? 1.0 : -1.0;
      basis_[i] = -1 - i;
    }
    factorize();
    const double scale = 1.0 + b_.cwiseAbs().maxCoeff();
    const auto p1 = run_phase(1);
    total_pivots += p1.pivots;
    if (p1.objective > 1e-8 * scale) {
      throw InternalError("simplex phase 1 failed: equality system infeasible");
    }
    have_basis_ = true;
  }

  const auto p2 = run_phase(2);
  total_pivots += p2.pivots;

  // Residual artificials must sit at zero.
  for (int i = 0; i < n_; ++i) {
    if (basis_[i] < 0 && std::abs(xb_(i)) > 1e-7 * (1.0 + b_.cwiseAbs().maxCoeff())) {
      throw InternalError("artificial variable remained active at optimum");
    }
  }

  factorize();  // tighten the inverse before extracting multipliers
  Solution sol;
  sol.pivots = total_pivots;
  Eigen::VectorXd cb(n_);
  for (int i = 0; i < n_; ++i) cb(i) = basis_[i] >= 0 ? costs_[basis_[i]] : 0.0;
  sol.multipliers = binv_.transpose() * cb;
  sol.y.assign(m, 0.0);
  double obj = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (basis_[i] >= 0) {
      sol.y[basis_[i]] = xb_(i);
      obj += costs_[basis_[i]] * xb_(i);
    }
  }
  sol.objective = obj;
  sol.basis = basis_;
  return sol;
}

}  // namespace ahlfors
