#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ahlfors/analytic.hpp"
#include "ahlfors/basis.hpp"
#include "ahlfors/domain.hpp"
#include "ahlfors/solver.hpp"
#include "ahlfors/types.hpp"

namespace ahlfors {

struct CheckReport {
  std::string check_name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::optional<Complex> witness{};
};

/// One JSON object per report, fixed key order, round-trip float formatting;
/// byte-identical across runs with the same inputs.
std::string to_json_line(const CheckReport& report);
void write_report(std::ostream& out, const std::vector<CheckReport>& reports);
int count_failures(const std::vector<CheckReport>& reports);

/// f_s(z) = exp((z + s)/(z - s)) for |s| = 1; bounded by 1 on the disk with
/// radial limit 0 at s. The family witnessing non-separability.
AnalyticFunction separation_family(Complex s);

/// The fixed 13-function test catalog on the unit disk: monomials z..z^8,
/// three disk automorphisms, two separation-family members. All have sup
/// norm 1.
struct CatalogEntry {
  std::string name;
  AnalyticFunction fn;
  double disk_norm;
};
const std::vector<CatalogEntry>& disk_catalog();

/// Fixed koebe_expand cases: (f, omitted value, base point) triples on the
/// unit disk with analytically known derivative gain.
struct KoebeCase {
  std::string name;
  AnalyticFunction f;
  Complex omitted;
  Complex base_point;
};
const std::vector<KoebeCase>& koebe_catalog();

CheckReport check_norm_preservation(const AnalyticFunction& ahlfors_fn,
                                    const std::string& h_name, const AnalyticFunction& h,
                                    const Domain& domain);
CheckReport check_composition_norm(const AnalyticFunction& ahlfors_fn,
                                   const CatalogEntry& f, const Domain& domain);
CheckReport check_nonseparability(const AnalyticFunction& ahlfors_fn,
                                  std::span<const Complex> s_values, const Domain& domain);
CheckReport check_almost_surjectivity(const AnalyticFunction& ahlfors_fn,
                                      const Domain& domain, double t, double r0);
CheckReport check_schwarz(const AnalyticFunction& f);

/// Executes every quantitative check that applies to the domain variant,
/// in a fixed order, against closed forms where the formulas exist and
/// solver output elsewhere. Solver non-convergence becomes a failed report,
/// not an exception.
std::vector<CheckReport> run_suite(const Domain& domain, const BasePoint& p,
                                   const SolverConfig& cfg = {},
                                   std::optional<BasisSpec> basis_override = {});

/// Per-variant default truncation used by run_suite and the CLI.
BasisSpec default_basis_spec(const Domain& domain);

}  // namespace ahlfors
