// End-to-end tests for the blochkit command-line tool.
//
// These run the real binary (path injected by the build as BLOCHKIT_CLI_PATH)
// through /bin/sh, so they exercise argument parsing, input loading, report
// envelopes, output formats, exit codes, and the BLOCHKIT_THREADS environment
// contract exactly as a user would.
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "blochkit/serialization.hpp"

namespace fs = std::filesystem;
using blochkit::json;

namespace {

const std::string kCli = BLOCHKIT_CLI_PATH;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "blochkit_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_json(const std::string& name, const json& j) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << j.dump(2) << "\n";
  return p;
}

fs::path write_text(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `cmd` through the shell and returns the child's exit code.
int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

json run_json(const std::string& args, const fs::path& out_path,
              int expect_code = 0) {
  std::string cmd = "\"" + kCli + "\" " + args + " --output " + q(out_path) +
                    " >/dev/null 2>&1";
  REQUIRE(run(cmd) == expect_code);
  return json::parse(read_file(out_path));
}

}  // namespace

TEST_CASE("cli: norm emits a complete json envelope") {
  fs::path in = write_json("norm_logtest.json",
                           {{"function", {{"kind", "logtest"}, {"theta", 0.0}}}});
  fs::path out = work_dir() / "norm_logtest.out.json";
  json rep = run_json("norm --input " + q(in) +
                          " --rings 6 --angles 64 --refine 1 --seed 42",
                      out);

  CHECK(rep.at("command").get<std::string>() == "norm");
  CHECK(rep.at("seed").get<std::uint64_t>() == 42);
  CHECK(rep.at("version").is_string());
  CHECK_FALSE(rep.at("version").get<std::string>().empty());

  // The grid the run actually used is echoed back.
  const json& grid = rep.at("grid");
  CHECK(grid.at("radii").size() == 6);
  CHECK(grid.at("angles_per_ring").get<int>() == 64);
  CHECK(grid.at("refinement_rounds").get<int>() == 1);

  // The input document is embedded verbatim.
  CHECK(rep.at("input").at("function").at("kind").get<std::string>() ==
        "logtest");

  // On the ray through its singularities the integrand is identically one,
  // and nowhere else is it larger, so the norm is 1 to rounding.
  const json& result = rep.at("result");
  CHECK(result.at("abs_at_origin").get<double>() == 0.0);
  CHECK(result.at("bloch_norm").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(result.at("seminorm").at("converged").is_boolean());
  CHECK(result.at("seminorm").at("stage_values").size() == 2);
  CHECK(result.at("sup_norm").at("value").get<double>() > 1.0);
  CHECK(result.at("little_bloch").at("trending_to_zero").get<bool>() == false);
  CHECK(result.at("little_bloch").at("ring_radii").size() == 17);
}

TEST_CASE("cli: norm accepts a bare function document") {
  // The input may be the function object itself, without a wrapper.
  fs::path in = write_json("norm_identity.json",
                           {{"kind", "monomial"}, {"n", 1}});
  fs::path out = work_dir() / "norm_identity.out.json";
  json rep = run_json(
      "norm --input " + q(in) + " --rings 6 --angles 64 --refine 1", out);

  // (1 - |z|^2)|f'| peaks at the origin, which refinement probes exactly.
  CHECK(rep.at("result").at("bloch_norm").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.at("input").at("kind").get<std::string>() == "monomial");
  // Default seed is echoed when none is given.
  CHECK(rep.at("seed").get<std::uint64_t>() == 1);
}

TEST_CASE("cli: csv format flattens the envelope") {
  fs::path in = write_json("csv_fn.json", {{"kind", "identity"}});
  fs::path out = work_dir() / "norm.out.csv";
  std::string cmd = "\"" + kCli + "\" norm --input " + q(in) +
                    " --rings 6 --angles 64 --refine 1 --format csv --output " +
                    q(out) + " >/dev/null 2>&1";
  REQUIRE(run(cmd) == 0);
  std::string text = read_file(out);

  CHECK(text.rfind("field,value\n", 0) == 0);
  CHECK(text.find("command,norm\n") != std::string::npos);
  CHECK(text.find("result.bloch_norm,") != std::string::npos);
  CHECK(text.find("grid.angles_per_ring,64\n") != std::string::npos);
  // Function documents are kind-tagged objects and stay out of the table.
  CHECK(text.find("input.kind") == std::string::npos);
}

TEST_CASE("cli: bounds reports two-sided bounds with diagnostics") {
  SUBCASE("multiplication symbol") {
    fs::path in = write_json(
        "bounds_mult.json",
        {{"kind", "multiplication"}, {"psi", {{"kind", "identity"}}}});
    fs::path out = work_dir() / "bounds_mult.out.json";
    json rep = run_json(
        "bounds --input " + q(in) + " --rings 6 --angles 64 --refine 2", out);

    const json& result = rep.at("result");
    double lower = result.at("bounds").at("lower").get<double>();
    double upper = result.at("bounds").at("upper").get<double>();
    CHECK(lower <= upper + 1e-12);
    CHECK(lower > 0.9);
    CHECK(result.at("brown_shields").at("plausible").get<bool>() == true);

    const json& emp = result.at("empirical");
    CHECK(emp.at("norms").size() == 17);
    CHECK(emp.at("best_label").is_string());
    CHECK(emp.at("best").get<double>() <= upper + 1e-6);
    CHECK(emp.at("best").get<double>() > 0.9);
  }

  SUBCASE("composition symbol") {
    fs::path in = write_json(
        "bounds_comp.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "automorphism"}, {"eta", {1.0, 0.0}}, {"a", {0.5, 0.0}}}}});
    fs::path out = work_dir() / "bounds_comp.out.json";
    json rep = run_json(
        "bounds --input " + q(in) + " --rings 6 --angles 64 --refine 2", out);

    const json& result = rep.at("result");
    CHECK(result.contains("ohno_zhao"));
    CHECK(result.at("ohno_zhao").at("plausible").get<bool>() == true);
    CHECK(result.at("bounds").at("lower").get<double>() <=
          result.at("bounds").at("upper").get<double>() + 1e-12);
    CHECK(result.at("empirical").at("best").get<double>() <=
          result.at("bounds").at("upper").get<double>() + 1e-6);
  }
}

TEST_CASE("cli: check-isometry verdicts") {
  SUBCASE("unimodular constant multiplication symbol is accepted") {
    fs::path in = write_json(
        "iso_mult.json",
        {{"kind", "multiplication"},
         {"psi", {{"kind", "const"}, {"value", {0.6, 0.8}}}}});
    fs::path out = work_dir() / "iso_mult.out.json";
    json rep = run_json("check-isometry --input " + q(in) +
                            " --rings 6 --angles 64 --refine 1",
                        out);
    CHECK(rep.at("result").at("is_isometry").get<bool>() == true);
    CHECK(rep.at("result").at("reason").is_string());
    CHECK(rep.at("result").at("evidence").is_object());
  }

  SUBCASE("weighted form reports both verdicts") {
    fs::path in = write_json(
        "iso_weighted.json",
        {{"kind", "weighted"},
         {"psi", {{"kind", "const"}, {"value", {0.6, 0.8}}}},
         {"phi",
          {{"kind", "rotation"}, {"order", "rational"}, {"p", 1}, {"q", 4}}}});
    fs::path out = work_dir() / "iso_weighted.out.json";
    json rep = run_json("check-isometry --input " + q(in) +
                            " --rings 6 --angles 64 --refine 1",
                        out);
    const json& result = rep.at("result");
    CHECK(result.at("psi").at("is_isometry").get<bool>() == true);
    CHECK(result.at("phi").at("is_isometry").get<bool>() == true);
    CHECK(result.at("is_isometry").get<bool>() == true);
  }

  SUBCASE("contractive composition symbol is rejected") {
    fs::path in = write_json(
        "iso_half.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "scale"},
           {"c", {0.5, 0.0}},
           {"inner", {{"kind", "identity"}}}}}});
    fs::path out = work_dir() / "iso_half.out.json";
    json rep = run_json("check-isometry --input " + q(in) +
                            " --rings 6 --angles 64 --refine 1",
                        out);
    CHECK(rep.at("result").at("is_isometry").get<bool>() == false);
  }
}

TEST_CASE("cli: spectrum command") {
  SUBCASE("declared rational rotation gives a finite set") {
    fs::path in = write_json(
        "spec_rot.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "rotation"}, {"order", "rational"}, {"p", 1}, {"q", 5}}}});
    fs::path out = work_dir() / "spec_rot.out.json";
    json rep = run_json("spectrum --input " + q(in), out);
    const json& spec = rep.at("result").at("spectrum");
    CHECK(spec.at("type").get<std::string>() == "finite_set");
    REQUIRE(spec.at("points").size() == 5);
    for (const json& pt : spec.at("points")) {
      double re = pt.at(0).get<double>();
      double im = pt.at(1).get<double>();
      CHECK(std::abs(std::hypot(re, im) - 1.0) < 1e-12);
    }
  }

  SUBCASE("irrational weighted rotation gives the unit circle") {
    fs::path in = write_json(
        "spec_weighted.json",
        {{"kind", "weighted"},
         {"psi", {{"kind", "const"}, {"value", {0.6, 0.8}}}},
         {"phi",
          {{"kind", "rotation"}, {"order", "irrational"}, {"angle", 1.2345}}}});
    fs::path out = work_dir() / "spec_weighted.out.json";
    json rep = run_json("spectrum --input " + q(in), out);
    CHECK(rep.at("result").at("spectrum").at("type").get<std::string>() ==
          "unit_circle");
  }

  SUBCASE("multiplication with a membership query") {
    fs::path in = write_json("spec_member.json",
                             {{"kind", "multiplication"},
                              {"psi", {{"kind", "identity"}}},
                              {"lambda", {2.0, 0.0}}});
    fs::path out = work_dir() / "spec_member.out.json";
    json rep = run_json(
        "spectrum --input " + q(in) + " --rings 6 --angles 64 --refine 1", out);

    const json& result = rep.at("result");
    CHECK(result.at("spectrum").at("type").get<std::string>() ==
          "range_closure");
    const json& mem = result.at("membership");
    CHECK(mem.at("in_spectrum").get<bool>() == false);
    // Nearest point of the sampled closure is the outermost ring, 1 - 2^-6.
    CHECK(mem.at("distance").get<double>() ==
          doctest::Approx(1.015625).epsilon(1e-13));
    CHECK(mem.at("resolvent_verified").get<bool>() == true);
    CHECK(mem.at("identity_residual").get<double>() <= 1e-10);
    CHECK(mem.at("resolvent").is_object());
  }

  SUBCASE("undeclared rotation symbols are rejected") {
    fs::path in = write_json(
        "spec_undeclared.json",
        {{"kind", "composition"}, {"phi", {{"kind", "identity"}}}});
    std::string cmd = "\"" + kCli + "\" spectrum --input " + q(in) +
                      " >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }
}

TEST_CASE("cli: resolvent command") {
  SUBCASE("rotation resolvent solve with matrix cross-check") {
    fs::path in = write_json(
        "res_ok.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "rotation"}, {"order", "rational"}, {"p", 1}, {"q", 4}}},
         {"mu", {2.0, 0.0}},
         {"g", {{"kind", "monomial"}, {"n", 1}}}});
    fs::path out = work_dir() / "res_ok.out.json";
    json rep = run_json("resolvent --input " + q(in), out);

    const json& result = rep.at("result");
    CHECK(result.at("solve").at("verified").get<bool>() == true);
    CHECK(result.at("solve").at("max_residual").get<double>() <= 1e-10);
    CHECK(result.at("solve").at("coefficients").size() == 4);
    CHECK(result.at("matrix").at("n").get<int>() == 4);
    // The determinant agrees with its closed form.
    double dre = result.at("matrix").at("determinant").at(0).get<double>();
    double fre =
        result.at("matrix").at("determinant_formula").at(0).get<double>();
    CHECK(dre == doctest::Approx(fre).epsilon(1e-12));
  }

  SUBCASE("mu on the forbidden root lattice exits 3") {
    fs::path in = write_json(
        "res_singular.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "rotation"}, {"order", "rational"}, {"p", 1}, {"q", 4}}},
         {"mu", {1.0, 0.0}}});
    fs::path err = work_dir() / "res_singular.err.txt";
    std::string cmd = "\"" + kCli + "\" resolvent --input " + q(in) +
                      " >/dev/null 2>" + q(err);
    CHECK(run(cmd) == 3);
    CHECK(read_file(err).find("singular_matrix") != std::string::npos);
  }

  SUBCASE("missing mu exits 2") {
    fs::path in = write_json(
        "res_no_mu.json",
        {{"kind", "composition"},
         {"phi",
          {{"kind", "rotation"}, {"order", "rational"}, {"p", 1}, {"q", 4}}}});
    std::string cmd = "\"" + kCli + "\" resolvent --input " + q(in) +
                      " >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }
}

TEST_CASE("cli: validation failures exit 2") {
  SUBCASE("missing input file") {
    fs::path err = work_dir() / "missing.err.txt";
    std::string cmd = "\"" + kCli + "\" norm --input " +
                      q(work_dir() / "does_not_exist.json") +
                      " >/dev/null 2>" + q(err);
    CHECK(run(cmd) == 2);
    CHECK(read_file(err).find("cannot open input file") != std::string::npos);
  }

  SUBCASE("malformed json input") {
    fs::path in = write_text("broken.json", "{ this is not json\n");
    std::string cmd =
        "\"" + kCli + "\" norm --input " + q(in) + " >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }

  SUBCASE("unknown operator kind") {
    fs::path in = write_json("bad_op.json", {{"kind", "projection"},
                                             {"psi", {{"kind", "identity"}}}});
    std::string cmd =
        "\"" + kCli + "\" bounds --input " + q(in) + " >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }

  SUBCASE("no subcommand") {
    CHECK(run("\"" + kCli + "\" >/dev/null 2>&1") == 2);
  }

  SUBCASE("unknown option") {
    CHECK(run("\"" + kCli + "\" norm --frobnicate >/dev/null 2>&1") == 2);
  }

  SUBCASE("bad format value") {
    fs::path in = write_json("fmt_fn.json", {{"kind", "identity"}});
    std::string cmd = "\"" + kCli + "\" norm --input " + q(in) +
                      " --format yaml >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }

  SUBCASE("non-numeric margin") {
    fs::path in = write_json("bad_margin.json",
                             {{"kind", "multiplication"},
                              {"psi", {{"kind", "identity"}}},
                              {"lambda", {2.0, 0.0}},
                              {"margin", "tight"}});
    std::string cmd =
        "\"" + kCli + "\" spectrum --input " + q(in) + " >/dev/null 2>&1";
    CHECK(run(cmd) == 2);
  }
}

TEST_CASE("cli: numerical failures exit 3") {
  // A composition symbol hugging the boundary overflows the hyperbolic
  // weight guard while the bounds are being assembled.
  fs::path in = write_json(
      "overflow.json",
      {{"kind", "composition"},
       {"phi", {{"kind", "const"}, {"value", {0.9999999999995, 0.0}}}}});
  fs::path err = work_dir() / "overflow.err.txt";
  std::string cmd = "\"" + kCli + "\" bounds --input " + q(in) +
                    " --rings 6 --angles 64 --refine 1 >/dev/null 2>" + q(err);
  CHECK(run(cmd) == 3);
  CHECK(read_file(err).find("numerical_overflow") != std::string::npos);
}

TEST_CASE("cli: help and version exit 0") {
  CHECK(run("\"" + kCli + "\" --version >/dev/null 2>&1") == 0);
  CHECK(run("\"" + kCli + "\" --help >/dev/null 2>&1") == 0);
  CHECK(run("\"" + kCli + "\" norm --help >/dev/null 2>&1") == 0);
}

TEST_CASE("cli: output is byte-identical across thread settings") {
  fs::path in = write_json("threads_fn.json",
                           {{"function", {{"kind", "logtest"}, {"theta", 0.7}}}});
  fs::path out1 = work_dir() / "threads1.out.json";
  fs::path out7 = work_dir() / "threads7.out.json";
  std::string base = "\"" + kCli + "\" norm --input " + q(in) +
                     " --rings 8 --angles 128 --refine 2 --seed 9 --output ";
  REQUIRE(run("BLOCHKIT_THREADS=1 " + base + q(out1) + " >/dev/null 2>&1") ==
          0);
  REQUIRE(run("BLOCHKIT_THREADS=7 " + base + q(out7) + " >/dev/null 2>&1") ==
          0);
  std::string a = read_file(out1);
  std::string b = read_file(out7);
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
}
