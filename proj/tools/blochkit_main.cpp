#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "blochkit/acceptance.hpp"
#include "blochkit/serialization.hpp"
#include "blochkit/version.hpp"

namespace {

using blochkit::AnalyticFn;
using blochkit::Complex;
using blochkit::DiskGrid;
using blochkit::json;

struct Options {
  std::string input_path;
  std::string output_path;
  std::string format = "json";
  int rings = 20;
  int angles = 512;
  int refine = 3;
  std::uint64_t seed = 1;
};

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw blochkit::DomainError("cannot open input file: " + path);
  return json::parse(in);
}

AnalyticFn fn_from_input(const json& in) {
  if (in.is_object() && in.contains("function"))
    return blochkit::fn_from_json(in.at("function"), "function");
  return blochkit::fn_from_json(in, "function");
}

json envelope(const std::string& command, const Options& opt,
              const DiskGrid& grid, json input, json result) {
  return {{"command", command},
          {"version", blochkit::kVersion},
          {"seed", opt.seed},
          {"grid", blochkit::grid_to_json(grid)},
          {"input", std::move(input)},
          {"result", std::move(result)}};
}

void emit(const json& report, const Options& opt) {
  std::string text = opt.format == "csv" ? blochkit::report_to_csv(report)
                                         : report.dump(2) + "\n";
  if (opt.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output_path);
  if (!out)
    throw blochkit::DomainError("cannot open output file: " + opt.output_path);
  out << text;
}

int cmd_norm(const Options& opt) {
  json in = load_input(opt.input_path);
  DiskGrid grid = DiskGrid::with_rings(opt.rings, opt.angles, opt.refine);
  AnalyticFn f = fn_from_input(in);

  blochkit::NormReport nr = blochkit::bloch_norm(f, grid);
  blochkit::SupremumEstimate sup = blochkit::sup_norm(f, grid);
  blochkit::LittleBlochReport lb = blochkit::little_bloch_check(f, grid);

  json result = {
      {"bloch_norm", nr.norm},
      {"abs_at_origin", nr.abs_at_origin},
      {"seminorm", blochkit::supremum_to_json(nr.seminorm)},
      {"sup_norm", blochkit::supremum_to_json(sup)},
      {"little_bloch",
       {{"ring_radii", lb.ring_radii},
        {"ring_maxima", lb.ring_maxima},
        {"trending_to_zero", lb.trending_to_zero}}},
  };
  emit(envelope("norm", opt, grid, in, result), opt);
  return 0;
}

int cmd_bounds(const Options& opt) {
  json in = load_input(opt.input_path);
  DiskGrid grid = DiskGrid::with_rings(opt.rings, opt.angles, opt.refine);
  blochkit::ParsedOperator op = blochkit::parse_operator(in);

  json result;
  std::optional<blochkit::OperatorSpec> spec;
  Complex phi0{0.0, 0.0};
  if (op.kind == blochkit::OperatorKind::Multiplication) {
    result["bounds"] = blochkit::norm_bounds_to_json(
        blochkit::mult_bounds(*op.psi, grid));
    blochkit::BrownShieldsReport bs = blochkit::brown_shields_check(*op.psi, grid);
    result["brown_shields"] = {{"sup_stat", bs.sup_stat},
                               {"plausible", bs.plausible}};
    spec = blochkit::OperatorSpec::multiplication(*op.psi);
  } else {
    AnalyticFn psi = op.psi ? *op.psi : blochkit::constant({1.0, 0.0});
    result["bounds"] =
        blochkit::norm_bounds_to_json(blochkit::wco_norm_bounds(psi, *op.phi, grid));
    blochkit::OhnoZhaoReport oz = blochkit::ohno_zhao_check(psi, *op.phi, grid);
    result["ohno_zhao"] = {{"cond1", blochkit::supremum_to_json(oz.cond1)},
                           {"cond2", blochkit::supremum_to_json(oz.cond2)},
                           {"plausible", oz.plausible}};
    spec = op.kind == blochkit::OperatorKind::Composition
               ? blochkit::OperatorSpec::composition(*op.phi, grid)
               : blochkit::OperatorSpec::weighted(psi, *op.phi, grid);
    phi0 = op.phi->eval({0.0, 0.0});
  }

  blochkit::TestFamily family = blochkit::TestFamily::standard(phi0, grid);
  blochkit::EmpiricalLower emp =
      blochkit::empirical_norm_lower(*spec, family, grid);
  result["empirical"] = {{"best", emp.best},
                         {"best_label", family.labels.at(emp.best_index)},
                         {"norms", emp.norms}};
  emit(envelope("bounds", opt, grid, in, result), opt);
  return 0;
}

int cmd_check_isometry(const Options& opt) {
  json in = load_input(opt.input_path);
  DiskGrid grid = DiskGrid::with_rings(opt.rings, opt.angles, opt.refine);
  blochkit::ParsedOperator op = blochkit::parse_operator(in);

  json result;
  switch (op.kind) {
    case blochkit::OperatorKind::Multiplication:
      result = blochkit::isometry_to_json(
          blochkit::mult_isometry_check(*op.psi, grid));
      break;
    case blochkit::OperatorKind::Composition:
      result = blochkit::isometry_to_json(
          blochkit::comp_isometry_check(*op.phi, grid));
      break;
    case blochkit::OperatorKind::Weighted: {
      blochkit::IsometryVerdict pv = blochkit::mult_isometry_check(*op.psi, grid);
      blochkit::IsometryVerdict cv = blochkit::comp_isometry_check(*op.phi, grid);
      result = {{"psi", blochkit::isometry_to_json(pv)},
                {"phi", blochkit::isometry_to_json(cv)},
                {"is_isometry", pv.is_isometry && cv.is_isometry}};
      break;
    }
  }
  emit(envelope("check-isometry", opt, grid, in, result), opt);
  return 0;
}

int cmd_spectrum(const Options& opt) {
  json in = load_input(opt.input_path);
  DiskGrid grid = DiskGrid::with_rings(opt.rings, opt.angles, opt.refine);
  blochkit::ParsedOperator op = blochkit::parse_operator(in);

  auto reject_undeclared_rotation = [&](const AnalyticFn& phi) {
    if (blochkit::is_structural_rotation(phi))
      throw blochkit::DomainError(
          "spectrum: rotation symbols must use the rotation form so the "
          "angle's arithmetic (rational or not) is declared, not inferred");
  };

  json result;
  switch (op.kind) {
    case blochkit::OperatorKind::Multiplication: {
      result["spectrum"] =
          blochkit::spectrum_to_json(blochkit::mult_spectrum(*op.psi, grid));
      if (in.contains("lambda")) {
        Complex lambda = blochkit::complex_from_json(in.at("lambda"), "lambda");
        double margin = 1e-3;
        if (in.contains("margin")) {
          if (!in.at("margin").is_number())
            throw blochkit::DomainError("margin: expected a number");
          margin = in.at("margin").get<double>();
        }
        result["membership"] = blochkit::membership_to_json(
            blochkit::mult_spectrum_membership(*op.psi, lambda, grid, margin));
      }
      break;
    }
    case blochkit::OperatorKind::Composition: {
      if (op.rotation) {
        result["spectrum"] = blochkit::spectrum_to_json(
            blochkit::rotation_comp_spectrum(*op.rotation));
      } else {
        reject_undeclared_rotation(*op.phi);
        result["spectrum"] = blochkit::spectrum_to_json(
            blochkit::nonrotation_comp_spectrum(*op.phi, grid));
      }
      break;
    }
    case blochkit::OperatorKind::Weighted: {
      std::optional<Complex> eta = blochkit::constant_value(*op.psi);
      if (!eta)
        throw blochkit::DomainError(
            "spectrum: weighted spectra need a constant unimodular weight");
      if (op.rotation) {
        result["spectrum"] = blochkit::spectrum_to_json(
            blochkit::weighted_iso_spectrum(*eta, *op.rotation));
      } else {
        reject_undeclared_rotation(*op.phi);
        result["spectrum"] = blochkit::spectrum_to_json(
            blochkit::weighted_iso_spectrum(*eta, *op.phi, grid));
      }
      break;
    }
  }
  emit(envelope("spectrum", opt, grid, in, result), opt);
  return 0;
}

int cmd_resolvent(const Options& opt) {
  json in = load_input(opt.input_path);
  DiskGrid grid = DiskGrid::with_rings(opt.rings, opt.angles, opt.refine);
  blochkit::ParsedOperator op = blochkit::parse_operator(in);

  json result;
  if (op.kind == blochkit::OperatorKind::Multiplication) {
    if (!in.contains("lambda"))
      throw blochkit::DomainError(
          "resolvent: the multiplication form needs a 'lambda' point");
    Complex lambda = blochkit::complex_from_json(in.at("lambda"), "lambda");
    result["membership"] = blochkit::membership_to_json(
        blochkit::mult_spectrum_membership(*op.psi, lambda, grid));
  } else if (op.kind == blochkit::OperatorKind::Composition) {
    if (!op.rotation)
      throw blochkit::DomainError(
          "resolvent: the composition form needs a declared rotation symbol");
    if (!in.contains("mu"))
      throw blochkit::DomainError("resolvent: missing the shift 'mu'");
    Complex mu = blochkit::complex_from_json(in.at("mu"), "mu");
    AnalyticFn g = in.contains("g") ? blochkit::fn_from_json(in.at("g"), "g")
                                    : blochkit::constant({1.0, 0.0});
    blochkit::ResolventSolve solve =
        blochkit::rotation_resolvent_solve(*op.rotation, mu, g);
    result["solve"] = blochkit::resolvent_solve_to_json(solve);
    if (auto order = op.rotation->order(); order && *order >= 2) {
      blochkit::ResolventMatrix rm =
          blochkit::resolvent_matrix(static_cast<int>(*order), mu);
      result["matrix"] = {
          {"n", *order},
          {"determinant", blochkit::complex_to_json(rm.determinant)},
          {"determinant_formula",
           blochkit::complex_to_json(rm.determinant_formula)}};
    }
  } else {
    throw blochkit::DomainError(
        "resolvent: only the multiplication and composition forms are "
        "supported");
  }
  emit(envelope("resolvent", opt, grid, in, result), opt);
  return 0;
}

int cmd_verify_suite(const Options& opt) {
  auto results = blochkit::acceptance::run_all(opt.seed, &std::cout);
  int passed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    if (r.pass) ++passed;
    arr.push_back({{"criterion", r.criterion},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail}});
  }
  bool ok = blochkit::acceptance::all_passed(results);
  std::cout << "verify-suite: " << passed << "/" << results.size()
            << " criteria passed\n";

  if (!opt.output_path.empty()) {
    json report = envelope("verify-suite", opt, DiskGrid::standard(), nullptr,
                           {{"criteria", arr}, {"all_passed", ok}});
    emit(report, opt);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blochkit: numerics for the Bloch space of the unit disk"};
  app.set_version_flag("--version", blochkit::kVersion);
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_input, bool grid_opts) {
    if (needs_input)
      sub->add_option("--input", opt.input_path, "input JSON file")->required();
    sub->add_option("--output", opt.output_path,
                    "output file (default: stdout)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    if (grid_opts) {
      sub->add_option("--rings", opt.rings, "grid rings (1..30)");
      sub->add_option("--angles", opt.angles, "angles per ring (>= 8)");
      sub->add_option("--refine", opt.refine, "refinement rounds (0..10)");
    }
    sub->add_option("--seed", opt.seed, "seed echoed into reports");
  };

  CLI::App* norm = app.add_subcommand("norm", "Bloch norm report of a function");
  add_common(norm, true, true);
  CLI::App* bounds =
      app.add_subcommand("bounds", "two-sided operator norm bounds");
  add_common(bounds, true, true);
  CLI::App* iso =
      app.add_subcommand("check-isometry", "isometry verdict for an operator");
  add_common(iso, true, true);
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "spectrum of an operator");
  add_common(spectrum, true, true);
  CLI::App* resolvent = app.add_subcommand(
      "resolvent", "resolvent construction and verification");
  add_common(resolvent, true, true);
  CLI::App* verify = app.add_subcommand(
      "verify-suite", "run the built-in verification catalogue (default grid)");
  add_common(verify, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(norm)) return cmd_norm(opt);
    if (app.got_subcommand(bounds)) return cmd_bounds(opt);
    if (app.got_subcommand(iso)) return cmd_check_isometry(opt);
    if (app.got_subcommand(spectrum)) return cmd_spectrum(opt);
    if (app.got_subcommand(resolvent)) return cmd_resolvent(opt);
    if (app.got_subcommand(verify)) return cmd_verify_suite(opt);
    std::cerr << "blochkit: error: domain: no command given\n";
    return 2;
  } catch (const blochkit::Error& e) {
    std::cerr << "blochkit: error: " << e.tag() << ": " << e.what() << "\n";
    return e.tag() == "domain" ? 2 : 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "blochkit: error: domain: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "blochkit: error: internal: " << e.what() << "\n";
    return 3;
  }
}
