// Command-line front end: compute Ahlfors functions and analytic capacity
// for JSON-described domains, count valence, run the verification suite,
// and dump image grids.
//
// Exit codes: 0 ok, 1 I/O, 2 bad input or geometry, 3 convergence or
// numerical failure, 4 verification failures.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ahlfors/closed_form.hpp"
#include "ahlfors/domain_json.hpp"
#include "ahlfors/harness.hpp"
#include "ahlfors/solver.hpp"

namespace {

using namespace ahlfors;
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

BasePoint parse_point(const std::string& text) {
  if (text == "inf") return BasePoint::infinity();
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidParameterError("--point expects \"re,im\" or \"inf\"");
  }
  try {
    const double re = std::stod(text.substr(0, comma));
    const double im = std::stod(text.substr(comma + 1));
    return BasePoint::at({re, im});
  } catch (const std::exception&) {
    throw InvalidParameterError("--point expects \"re,im\" or \"inf\"");
  }
}

Complex parse_probe(const std::string& text) {
  const auto p = parse_point(text);
  return p.finite_value();
}

struct Options {
  std::string domain_file;
  std::string point_text = "inf";
  std::string out_dir = ".";
  int degree = -1;  // -1: per-variant default
  int samples = 512;
  int resolution = 64;
  std::vector<std::string> probes;
};

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

BasisSpec basis_for(const Domain& domain, const Options& opt) {
  BasisSpec spec = default_basis_spec(domain);
  if (opt.degree >= 0) {
    spec.polynomial_degree = opt.degree;
    spec.hole_depth = opt.degree;
  }
  return spec;
}

SolverConfig config_for(const Options& opt) {
  SolverConfig cfg;
  cfg.boundary_samples_per_component = opt.samples;
  return cfg;
}

struct ComputedFunction {
  AnalyticFunction fn;
  double gamma = 0.0;
  ordered_json representation;
  std::optional<AhlforsSolution> solution;  // set when solver-backed
};

ordered_json point_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json moebius_json(const MoebiusTransform& t) {
  ordered_json rep;
  rep["type"] = "moebius";
  ordered_json coeffs = ordered_json::array();
  for (const Complex& c : t.coefficients()) coeffs.push_back(point_json(c));
  rep["coefficients"] = coeffs;
  return rep;
}

ComputedFunction compute_function(const Domain& domain, const BasePoint& p,
                                  const Options& opt) {
  ComputedFunction out;
  switch (domain.variant()) {
    case Domain::Variant::UnitDisk: {
      const auto cf = ahlfors_disk(p.finite_value());
      out.fn = cf.function();
      out.gamma = cf.gamma();
      out.representation = moebius_json(cf.moebius());
      return out;
    }
    case Domain::Variant::ExteriorUnitDisk: {
      if (p.is_infinity()) {
        const auto inv = MoebiusTransform::inversion();
        out.fn = to_analytic(inv);
        out.gamma = 1.0;
        out.representation = moebius_json(inv);
        return out;
      }
      const auto cf = ahlfors_exterior_disk(p.finite_value());
      out.fn = cf.function();
      out.gamma = cf.gamma();
      out.representation = moebius_json(cf.moebius());
      return out;
    }
    case Domain::Variant::RealSlitComplement: {
      if (!p.is_infinity()) {
        throw InvalidParameterError(
            "real_slit domains use the base point inf (pass --point inf)");
      }
      const QuadratureSpec q;
      const auto cf = ahlfors_real_slit(domain.slits(), q);
      out.fn = cf.function();
      out.gamma = cf.gamma();
      out.representation["type"] = "real_slit";
      ordered_json slits = ordered_json::array();
      for (const auto& [a, b] : domain.slits().intervals()) {
        slits.push_back(ordered_json::array({a, b}));
      }
      out.representation["slits"] = slits;
      out.representation["nodes_per_interval"] = q.nodes_per_interval;
      return out;
    }
    case Domain::Variant::CircleDomain: {
      const auto sol = solve_extremal(domain, p, basis_for(domain, opt), config_for(opt));
      out.fn = to_analytic(sol);
      out.gamma = sol.gamma;
      out.representation["type"] = "basis";
      ordered_json terms = ordered_json::array();
      for (const auto& t : sol.basis->terms()) {
        ordered_json term;
        term["center"] = point_json(t.center);
        term["scale"] = t.scale;
        term["power"] = t.power;
        terms.push_back(term);
      }
      out.representation["terms"] = terms;
      ordered_json coeffs = ordered_json::array();
      for (const Complex& c : sol.coefficients) coeffs.push_back(point_json(c));
      out.representation["coefficients"] = coeffs;
      out.solution = sol;
      return out;
    }
  }
  throw InternalError("unreachable domain variant");
}

int cmd_compute(const Options& opt) {
  const Domain domain = parse_domain_file(opt.domain_file);
  const BasePoint p = parse_point(opt.point_text);
  if (!domain.contains(p)) {
    throw InvalidParameterError("base point is not inside the domain");
  }
  const auto computed = compute_function(domain, p, opt);

  fs::create_directories(opt.out_dir);
  ordered_json doc;
  doc["gamma"] = computed.gamma;
  if (p.is_infinity()) {
    doc["base_point"] = "inf";
  } else {
    doc["base_point"] = point_json(p.finite_value());
  }
  doc["representation"] = computed.representation;
  {
    auto out = open_output(fs::path(opt.out_dir) / "solution.json");
    out << doc.dump(2) << "\n";
  }
  {
    auto out = open_output(fs::path(opt.out_dir) / "boundary_modulus.csv");
    out << "component,parameter,modulus\n";
    for (const auto& s : sample_boundary(domain, opt.samples)) {
      out << s.component << "," << fmt(s.parameter) << ","
          << fmt(std::abs(computed.fn.value(s.point))) << "\n";
    }
  }
  return 0;
}

int cmd_capacity(const Options& opt) {
  const Domain domain = parse_domain_file(opt.domain_file);
  const BasePoint p = parse_point(opt.point_text);
  double gamma = 0.0;
  switch (domain.variant()) {
    case Domain::Variant::RealSlitComplement:
      if (!p.is_infinity()) {
        throw InvalidParameterError("capacity of a slit set is taken at inf");
      }
      gamma = capacity_real_slit(domain.slits());
      break;
    case Domain::Variant::ExteriorUnitDisk:
      gamma = p.is_infinity() ? 1.0 : ahlfors_exterior_disk(p.finite_value()).gamma();
      break;
    case Domain::Variant::UnitDisk:
      gamma = ahlfors_disk(p.finite_value()).gamma();
      break;
    case Domain::Variant::CircleDomain: {
      if (!domain.contains(p)) {
        throw InvalidParameterError("base point is not inside the domain");
      }
      gamma = solve_extremal(domain, p, basis_for(domain, opt), config_for(opt)).gamma;
      break;
    }
  }
  std::printf("gamma=%.12g\n", gamma);
  return 0;
}

int cmd_valence(const Options& opt) {
  const Domain domain = parse_domain_file(opt.domain_file);
  const BasePoint p = parse_point(opt.point_text);
  if (!domain.contains(p)) {
    throw InvalidParameterError("base point is not inside the domain");
  }
  const auto computed = compute_function(domain, p, opt);
  std::vector<Complex> probes;
  if (opt.probes.empty()) {
    probes = {Complex(0.0, 0.0), Complex(0.25, 0.0), Complex(0.0, 0.3)};
  } else {
    for (const auto& text : opt.probes) probes.push_back(parse_probe(text));
  }
  for (const Complex& w : probes) {
    const int count = valence(computed.fn, domain, w, opt.samples >= 8 ? 4 * opt.samples : 2048);
    std::printf("w=%.12g,%.12g valence=%d\n", w.real(), w.imag(), count);
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  const Domain domain = parse_domain_file(opt.domain_file);
  const BasePoint p = parse_point(opt.point_text);
  std::optional<BasisSpec> spec;
  if (opt.degree >= 0) spec = BasisSpec{opt.degree, opt.degree};
  const auto reports = run_suite(domain, p, config_for(opt), spec);

  fs::create_directories(opt.out_dir);
  {
    auto out = open_output(fs::path(opt.out_dir) / "verify_report.jsonl");
    write_report(out, reports);
  }
  const int failures = count_failures(reports);
  std::printf("checks=%zu failures=%d\n", reports.size(), failures);
  return failures == 0 ? 0 : 4;
}

int cmd_grid(const Options& opt) {
  if (opt.resolution < 16) {
    throw InvalidParameterError("--resolution must be at least 16");
  }
  const Domain domain = parse_domain_file(opt.domain_file);
  const BasePoint p = parse_point(opt.point_text);
  if (!domain.contains(p)) {
    throw InvalidParameterError("base point is not inside the domain");
  }
  const auto computed = compute_function(domain, p, opt);
  const auto mesh = uniform_mesh(domain, opt.resolution);

  fs::create_directories(opt.out_dir);
  std::vector<Complex> images;
  images.reserve(mesh.size());
  {
    auto out = open_output(fs::path(opt.out_dir) / "image_grid.csv");
    out << "z_re,z_im,F_re,F_im\n";
    for (const Complex& z : mesh) {
      const Complex w = computed.fn.value(z);
      images.push_back(w);
      out << fmt(z.real()) << "," << fmt(z.imag()) << "," << fmt(w.real()) << ","
          << fmt(w.imag()) << "\n";
    }
  }
  {
    auto out = open_output(fs::path(opt.out_dir) / "image_plot.svg");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    out << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#333\" "
           "stroke-width=\"0.01\"/>\n";
    char buf[128];
    for (const Complex& w : images) {
      std::snprintf(buf, sizeof(buf),
                    "<circle cx=\"%.6g\" cy=\"%.6g\" r=\"0.006\" fill=\"#1f77b4\" "
                    "fill-opacity=\"0.6\"/>\n",
                    w.real(), -w.imag());
      out << buf;
    }
    out << "</svg>\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ahlfors functions and analytic capacity for planar domains"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--domain", opt.domain_file, "domain JSON file")->required();
    sub->add_option("--point", opt.point_text, "base point: re,im or inf");
    if (with_out) sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--degree", opt.degree, "basis truncation degree");
    sub->add_option("--samples", opt.samples, "boundary samples per component");
  };

  auto* compute = app.add_subcommand("compute", "solve and write solution artifacts");
  add_common(compute, true);
  auto* capacity = app.add_subcommand("capacity", "print gamma for the domain");
  add_common(capacity, false);
  auto* valence_cmd = app.add_subcommand("valence", "argument-principle counts");
  add_common(valence_cmd, false);
  valence_cmd->add_option("--w", opt.probes, "probe value re,im (repeatable)");
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  add_common(verify, true);
  auto* grid = app.add_subcommand("grid", "image grid CSV and SVG scatter");
  add_common(grid, true);
  grid->add_option("--resolution", opt.resolution, "mesh resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt);
    if (capacity->parsed()) return cmd_capacity(opt);
    if (valence_cmd->parsed()) return cmd_valence(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (grid->parsed()) return cmd_grid(opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalInstabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
