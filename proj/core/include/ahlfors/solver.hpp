#pragma once

#include <memory>
#include <vector>

#include "ahlfors/analytic.hpp"
#include "ahlfors/basis.hpp"
#include "ahlfors/domain.hpp"
#include "ahlfors/errors.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

struct SolverConfig {
  int boundary_samples_per_component = 512;
  int angle_cuts = 16;  // initial linearization angles per seeded point
  int max_outer_iterations = 60;
  double constraint_tolerance = 1e-6;
  double stall_tolerance = 1e-10;
};

struct SolverDiagnostics {
  int iterations = 0;
  double max_boundary_modulus = 0.0;  // on the fine check grid
  int final_cut_count = 0;
};

/// Solver output: coefficients over the rational basis, normalized so that
/// h'(p) is real positive; gamma is that derivative value.
struct AhlforsSolution {
  std::vector<Complex> coefficients;
  double gamma = 0.0;
  BasePoint base_point = BasePoint::infinity();
  SolverDiagnostics diagnostics;
  std::shared_ptr<const RationalBasis> basis;
  std::shared_ptr<const Domain> domain;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, AhlforsSolution best_iterate)
      : Error(what), best(std::move(best_iterate)) {}
  AhlforsSolution best;
};

/// Maximizes Re h'(p) over the basis span subject to |h| <= 1 on the
/// boundary, by exchange/cutting planes: the modulus constraint is
/// linearized as Re(e^{-i theta} h(zeta)) <= 1 over an adaptively grown set
/// of (zeta, theta) cuts, each inner problem a deterministic LP. Terminates
/// when the worst true violation on a 4x finer check grid is within
/// constraint_tolerance and the objective has stalled.
AhlforsSolution solve_extremal(const Domain& domain, const BasePoint& p,
                               const BasisSpec& spec, const SolverConfig& cfg = {});

/// Evaluates the solution at z in the closed domain; OutOfDomainError
/// otherwise.
Complex evaluate(const AhlforsSolution& sol, Complex z);
Complex evaluate_derivative(const AhlforsSolution& sol, Complex z);

AnalyticFunction to_analytic(const AhlforsSolution& sol);

struct BoundaryModulusPoint {
  int component;
  double parameter;
  double modulus;
};

/// |h| at n boundary points per component.
std::vector<BoundaryModulusPoint> boundary_modulus_profile(const AhlforsSolution& sol,
                                                           int n);

/// Argument-principle count of solutions of f = w in the domain:
/// (1/2 pi i) sum over boundary components of the contour integral of
/// f'/(f - w), with n samples per component. The pre-rounding value must
/// land within 0.1 of an integer (ResolutionError otherwise); |w| must stay
/// margin away from the unit circle (MarginError).
int valence(const AnalyticFunction& f, const Domain& domain, Complex w, int n,
            double margin = 0.05);

inline int valence(const AhlforsSolution& sol, const Domain& domain, Complex w, int n,
                   double margin = 0.05) {
  return valence(to_analytic(sol), domain, w, n, margin);
}

}  // namespace ahlfors
