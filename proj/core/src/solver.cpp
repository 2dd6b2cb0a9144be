#include "ahlfors/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahlfors/linprog.hpp"

namespace ahlfors {

namespace {

struct ComponentRange {
  int begin = 0;
  int end = 0;  // one past
};

std::vector<ComponentRange> component_ranges(const std::vector<BoundarySample>& samples,
                                             int num_components) {
  std::vector<ComponentRange> ranges(num_components);
  for (int c = 0, i = 0; c < num_components; ++c) {
    ranges[c].begin = i;
    while (i < static_cast<int>(samples.size()) && samples[i].component == c) ++i;
    ranges[c].end = i;
  }
  return ranges;
}

Eigen::VectorXd cut_column(const Eigen::MatrixXcd& basis_rows, int row, double theta) {
  const int dim = static_cast<int>(basis_rows.cols());
  Eigen::VectorXd g(2 * dim);
  const Complex rot = std::polar(1.0, -theta);
  for (int j = 0; j < dim; ++j) {
    const Complex v = rot * basis_rows(row, j);
    g(j) = v.real();
    g(dim + j) = -v.imag();
  }
  return g;
}

AhlforsSolution make_solution(std::vector<Complex> coeffs, double gamma,
                              const BasePoint& p, SolverDiagnostics diag,
                              std::shared_ptr<const RationalBasis> basis,
                              std::shared_ptr<const Domain> domain) {
  AhlforsSolution sol;
  sol.coefficients = std::move(coeffs);
  sol.gamma = gamma;
  sol.base_point = p;
  sol.diagnostics = diag;
  sol.basis = std::move(basis);
  sol.domain = std::move(domain);
  return sol;
}

}  // namespace

AhlforsSolution solve_extremal(const Domain& domain, const BasePoint& p,
                               const BasisSpec& spec, const SolverConfig& cfg) {
  if (!domain.contains(p)) {
    throw InvalidParameterError("base point is not inside the domain");
  }
  auto basis = std::make_shared<const RationalBasis>(domain, spec, p);
  auto domain_ptr = std::make_shared<const Domain>(domain);
  const int dim = basis->dimension();

  const Eigen::VectorXcd d = basis->derivative_at_base();
  if (d.cwiseAbs().maxCoeff() < 1e-14) {
    throw NonConvergenceError(
        "basis cannot represent a function with nonzero derivative at the base point",
        make_solution(std::vector<Complex>(dim, Complex{0, 0}), 0.0, p, {}, basis,
                      domain_ptr));
  }

  const int n_samp = cfg.boundary_samples_per_component;
  const auto samples = sample_boundary(domain, n_samp);
  const auto check_samples = sample_boundary(domain, 4 * n_samp);
  const int num_components = domain.num_boundary_components();

  std::vector<Complex> sample_points(samples.size()), check_points(check_samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) sample_points[i] = samples[i].point;
  for (std::size_t i = 0; i < check_samples.size(); ++i) {
    check_points[i] = check_samples[i].point;
  }
  const Eigen::MatrixXcd phi_samples = basis->eval_matrix(sample_points);
  const Eigen::MatrixXcd phi_check = basis->eval_matrix(check_points);
  const auto check_ranges = component_ranges(check_samples, num_components);
  const auto sample_ranges = component_ranges(samples, num_components);

  const int rows = 2 * dim;
  Eigen::VectorXd rhs(rows);
  for (int j = 0; j < dim; ++j) {
    rhs(j) = d(j).real();
    rhs(dim + j) = -d(j).imag();
  }

  // One growing LP across the exchange iterations: a +/- e_i box at a large
  // cost keeps the first solve bounded without phase-1 work, added cuts
  // leave the current basis feasible, and every re-solve warm-starts from
  // it. The extremal coefficients are O(1), so the box is inactive at
  // convergence.
  const double box_bound = 1e3;
  SimplexLp lp(rows);
  lp.set_rhs(rhs);
  for (int sign = 0; sign < 2; ++sign) {
    for (int i = 0; i < rows; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(rows);
      e(i) = sign == 0 ? 1.0 : -1.0;
      lp.add_column(e, box_bound);
    }
  }
  {
    std::vector<int> start(rows);
    for (int i = 0; i < rows; ++i) start[i] = rhs(i) >= 0.0 ? i : rows + i;
    lp.set_starting_basis(start);
  }

  // Seed cuts: an even subset of boundary points, angle_cuts angles each.
  // The angles are staggered per point and per component so that domain
  // symmetries cannot produce exactly duplicated cut columns.
  const int seed_per_component =
      std::min(n_samp, std::max(16, (2 * dim) / std::max(1, num_components)));
  for (int c = 0; c < num_components; ++c) {
    const int count = sample_ranges[c].end - sample_ranges[c].begin;
    for (int i = 0; i < seed_per_component; ++i) {
      const int row = sample_ranges[c].begin +
                      static_cast<int>(static_cast<long long>(i) * count /
                                       seed_per_component);
      const double stagger = (i % 2) * 0.5;
      const double component_offset = 0.318 * c;
      for (int l = 0; l < cfg.angle_cuts; ++l) {
        lp.add_column(cut_column(phi_samples, row,
                                 2.0 * kPi * (l + stagger) / cfg.angle_cuts +
                                     component_offset),
                      1.0);
      }
    }
  }

  Eigen::VectorXcd coeffs(dim);
  double gamma_lp = 0.0;
  double prev_gamma = std::numeric_limits<double>::quiet_NaN();
  double max_violation = 0.0;
  bool converged = false;
  int iterations = 0;
  Eigen::VectorXcd h_check;

  const double cut_floor = 0.1 * cfg.constraint_tolerance;
  while (iterations < cfg.max_outer_iterations) {
    ++iterations;
    const auto lp_sol = lp.solve();
    gamma_lp = lp_sol.objective;
    for (int j = 0; j < dim; ++j) {
      coeffs(j) = Complex(lp_sol.multipliers(j), lp_sol.multipliers(dim + j));
    }
    bool box_active = false;
    for (int idx : lp_sol.basis) {
      if (idx >= 0 && idx < 2 * rows &&
          lp_sol.y[idx] > 1e-9 * (1.0 + rhs.cwiseAbs().maxCoeff())) {
        box_active = true;
      }
    }

    h_check = phi_check * coeffs;
    max_violation = h_check.cwiseAbs().maxCoeff() - 1.0;

    const bool stalled = !std::isnan(prev_gamma) &&
                         std::abs(gamma_lp - prev_gamma) <=
                             cfg.stall_tolerance * std::max(1.0, std::abs(gamma_lp));
    if (!box_active && max_violation <= cfg.constraint_tolerance &&
        (stalled || max_violation <= cut_floor)) {
      converged = true;
      break;
    }
    prev_gamma = gamma_lp;

    // Exchange step: cut at every local violation maximum on the check grid
    // (cyclic per component), worst first, at the supporting angle arg h.
    struct Candidate {
      double violation;
      int row;
    };
    std::vector<Candidate> candidates;
    for (int c = 0; c < num_components; ++c) {
      const int begin = check_ranges[c].begin, end = check_ranges[c].end;
      const int count = end - begin;
      for (int i = begin; i < end; ++i) {
        const double v = std::abs(h_check(i)) - 1.0;
        if (v <= cut_floor) continue;
        const int prev = begin + (i - begin + count - 1) % count;
        const int next = begin + (i - begin + 1) % count;
        if (std::abs(h_check(prev)) <= std::abs(h_check(i)) &&
            std::abs(h_check(next)) <= std::abs(h_check(i))) {
          candidates.push_back({v, i});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.violation != b.violation) return a.violation > b.violation;
                return a.row < b.row;
              });
    if (candidates.size() > 24) candidates.resize(24);
    for (const auto& cand : candidates) {
      lp.add_column(cut_column(phi_check, cand.row, std::arg(h_check(cand.row))), 1.0);
    }
  }

  // Phase normalization: rotate so h'(p) is real positive.
  Complex hp{0.0, 0.0};
  for (int j = 0; j < dim; ++j) hp += coeffs(j) * d(j);
  const double gamma = std::abs(hp);
  std::vector<Complex> out(dim);
  if (gamma > 0.0) {
    const Complex rot = std::conj(hp) / gamma;
    for (int j = 0; j < dim; ++j) out[j] = rot * coeffs(j);
  }

  SolverDiagnostics diag;
  diag.iterations = iterations;
  diag.max_boundary_modulus = 1.0 + max_violation;
  diag.final_cut_count = lp.columns();

  auto solution = make_solution(std::move(out), gamma, p, diag, basis, domain_ptr);
  if (!converged) {
    throw NonConvergenceError("extremal solver hit the outer iteration limit",
                              std::move(solution));
  }
  return solution;
}

Complex evaluate(const AhlforsSolution& sol, Complex z) {
  if (!sol.domain->in_closure(z)) {
    throw OutOfDomainError("evaluation point is outside the closed domain");
  }
  return sol.basis->evaluate(sol.coefficients, z);
}

Complex evaluate_derivative(const AhlforsSolution& sol, Complex z) {
  if (!sol.domain->in_closure(z)) {
    throw OutOfDomainError("evaluation point is outside the closed domain");
  }
  return sol.basis->evaluate_derivative(sol.coefficients, z);
}

AnalyticFunction to_analytic(const AhlforsSolution& sol) {
  AnalyticFunction f;
  f.value = [basis = sol.basis, c = sol.coefficients](Complex z) {
    return basis->evaluate(c, z);
  };
  f.derivative = [basis = sol.basis, c = sol.coefficients](Complex z) {
    return basis->evaluate_derivative(c, z);
  };
  if (sol.domain->contains_infinity()) {
    Complex v{0.0, 0.0};
    for (int j = 0; j < sol.basis->dimension(); ++j) {
      if (sol.basis->terms()[j].power == 0) v += sol.coefficients[j];
    }
    f.at_infinity = v;
  }
  return f;
}

std::vector<BoundaryModulusPoint> boundary_modulus_profile(const AhlforsSolution& sol,
                                                           int n) {
  const auto samples = sample_boundary(*sol.domain, n);
  std::vector<BoundaryModulusPoint> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    out.push_back({s.component, s.parameter,
                   std::abs(sol.basis->evaluate(sol.coefficients, s.point))});
  }
  return out;
}

int valence(const AnalyticFunction& f, const Domain& domain, Complex w, int n,
            double margin) {
  if (std::abs(w) >= 1.0 - margin) {
    throw MarginError("probe value too close to the unit circle");
  }
  const auto samples = sample_boundary(domain, n);
  Complex acc{0.0, 0.0};
  for (const auto& s : samples) {
    acc += s.weight * s.unit_tangent * f.derivative(s.point) / (f.value(s.point) - w);
  }
  const Complex count = acc / (2.0 * kPi * kI);
  const long nearest = std::lround(count.real());
  if (std::abs(count - Complex(static_cast<double>(nearest), 0.0)) > 0.1) {
    throw ResolutionError("argument-principle count is not close to an integer");
  }
  return static_cast<int>(nearest);
}

}  // namespace ahlfors
