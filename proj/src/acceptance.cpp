#include "blochkit/acceptance.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "blochkit/spectra.hpp"

namespace blochkit::acceptance {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Aggregates sub-checks of one criterion: pass/fail counts, the first few
// failing labels, and named worst-case metrics for the detail line.
class Tally {
 public:
  void require(bool ok, const std::string& label) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (fail_labels_.size() < 4) fail_labels_.push_back(label);
    }
  }

  void track(const std::string& name, double v) {
    auto [it, inserted] = worst_.try_emplace(name, v);
    if (!inserted && v > it->second) it->second = v;
  }

  bool pass() const { return failed_ == 0 && total_ > 0; }

  std::string detail() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    os << std::scientific << std::setprecision(2);
    for (const auto& [name, v] : worst_) os << "; max " << name << " = " << v;
    if (failed_ > 0) {
      os << "; failed:";
      for (const std::string& l : fail_labels_) os << ' ' << l;
      if (failed_ > static_cast<int>(fail_labels_.size()))
        os << " (+" << failed_ - static_cast<int>(fail_labels_.size())
           << " more)";
    }
    return os.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> fail_labels_;
  std::map<std::string, double> worst_;
};

struct Ctx {
  DiskGrid grid;
  std::uint64_t seed = 0;
};

std::mt19937_64 rng_for(const Ctx& ctx, int criterion) {
  return std::mt19937_64(ctx.seed * 0x9E3779B97F4A7C15ULL +
                         static_cast<std::uint64_t>(criterion));
}

Complex random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  return std::polar(1.0, u(rng));
}

Complex random_in_disk(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(-rmax, rmax);
  while (true) {
    Complex z{u(rng), u(rng)};
    if (std::abs(z) <= rmax) return z;
  }
}

double half_log_ratio(double r) { return 0.5 * std::log((1.0 + r) / (1.0 - r)); }

std::string idx_label(const char* stem, int i) {
  std::ostringstream os;
  os << stem << '-' << i;
  return os.str();
}

// --- criterion 1: unit norm of the log test family ---

CheckResult c1_logtest(const Ctx& ctx) {
  Tally t;
  for (double theta : {0.0, kPi / 3.0, 2.1}) {
    NormReport rep = bloch_norm(log_test(theta), ctx.grid);
    double err = std::abs(rep.norm - 1.0);
    t.track("norm-err", err);
    std::ostringstream label;
    label << "theta-" << theta;
    t.require(err <= 1e-3, label.str());
  }
  return {1, "logtest-norm", t.pass(), t.detail()};
}

// --- criterion 2: automorphism norms and the lower log ingredient ---

CheckResult c2_automorphism(const Ctx& ctx) {
  Tally t;
  const Complex eta = std::polar(1.0, 0.4);
  const Complex as[] = {{0.3, 0.0}, {0.5, 0.2}, {0.0, 0.85}};
  AnalyticFn id = identity();
  int i = 0;
  for (Complex a : as) {
    ++i;
    AnalyticFn psi = automorphism(eta, a);
    double mod_a = std::abs(a);

    NormReport rep = bloch_norm(psi, ctx.grid);
    double err = std::abs(rep.norm - (mod_a + 1.0));
    t.track("norm-err", err);
    t.require(err <= 1e-3, idx_label("norm", i));

    double target = half_log_ratio(mod_a);
    double sigma = sigma_infty(psi, id, ctx.grid).value;
    t.track("sigma-slack", target - sigma);
    t.require(sigma >= target - 1e-6, idx_label("sigma-lower", i));
    t.require(target > mod_a, idx_label("log-exceeds-a", i));
  }
  return {2, "automorphism-norm", t.pass(), t.detail()};
}

// --- criterion 3: power seminorm bounds ---

CheckResult c3_power_bounds(const Ctx& ctx) {
  Tally t;
  for (int n = 2; n <= 64; ++n)
    t.require(power_norm_bound(n) < 1.0, idx_label("bound-below-1", n));

  for (int n = 2; n <= 10; ++n) {
    double beta = bloch_seminorm(monomial(n), ctx.grid).value;
    double err = std::abs(beta - power_norm_bound(n));
    t.track("monomial-beta-err", err);
    t.require(err <= 1e-6, idx_label("monomial", n));
  }

  std::mt19937_64 rng = rng_for(ctx, 3);
  std::uniform_int_distribution<int> extra(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> zeros{{0.0, 0.0}};
    int k = extra(rng);
    for (int j = 0; j < k; ++j) zeros.push_back(random_in_disk(rng, 0.7));
    AnalyticFn psi = blaschke_product(zeros, random_unimodular(rng));
    PowerNormReport rep = power_norm_check(psi, 5, ctx.grid);
    double slack = 0.0;
    for (const PowerNormRow& row : rep.rows)
      slack = std::max(slack, row.beta - row.bound);
    t.track("blaschke-overshoot", slack);
    t.require(rep.all_within, idx_label("blaschke", trial));
  }
  return {3, "power-bounds", t.pass(), t.detail()};
}

// --- criterion 4: two-sided norm sandwich over an operator catalogue ---

CheckResult c4_sandwich(const Ctx& ctx) {
  Tally t;
  const Complex one{1.0, 0.0};
  struct Pair {
    AnalyticFn psi, phi;
  };
  std::vector<Pair> pairs;
  pairs.push_back({constant(one), identity()});
  pairs.push_back({constant(std::polar(1.0, kPi / 7.0)), identity()});
  pairs.push_back({constant(one), rotation_fn({0.0, 1.0})});
  pairs.push_back({constant(one), scale({0.5, 0.0}, identity())});
  pairs.push_back({constant(one), automorphism(one, {0.6, 0.0})});
  pairs.push_back({identity(), identity()});
  pairs.push_back({monomial(2), identity()});
  pairs.push_back({automorphism(one, {0.3, 0.0}), identity()});
  pairs.push_back({constant({2.0, 0.0}), automorphism(one, {0.9, 0.0})});
  pairs.push_back({polynomial({{0.3, 0.0}, {0.4, 0.0}}),
                   scale({0.5, 0.0}, identity())});
  pairs.push_back({blaschke_product({{0.0, 0.0}, {0.5, 0.0}}, one), identity()});
  pairs.push_back({automorphism(one, {0.5, 0.0}),
                   rotation_fn(std::polar(1.0, 2.0 * kPi / 5.0))});
  pairs.push_back({log_test(0.0), scale({0.5, 0.0}, identity())});
  pairs.push_back({constant({0.5, 0.0}),
                   blaschke_product({{0.0, 0.0}, {0.3, 0.0}}, one)});
  pairs.push_back({automorphism(std::polar(1.0, 0.7), {0.0, 0.5}),
                   automorphism(one, {0.4, 0.0})});

  int i = 0;
  for (const Pair& p : pairs) {
    ++i;
    NormBounds nb = wco_norm_bounds(p.psi, p.phi, ctx.grid);
    OperatorSpec op = OperatorSpec::weighted(p.psi, p.phi, ctx.grid);
    TestFamily family = TestFamily::standard(p.phi.eval({0.0, 0.0}), ctx.grid);
    EmpiricalLower emp = empirical_norm_lower(op, family, ctx.grid);

    t.track("lower-violation", nb.lower - emp.best);
    t.track("upper-violation", emp.best - nb.upper);
    t.require(nb.lower - 1e-6 <= emp.best, idx_label("pair-lower", i));
    t.require(emp.best <= nb.upper + 1e-6, idx_label("pair-upper", i));
  }
  return {4, "norm-sandwich", t.pass(), t.detail()};
}

// --- criterion 5: degenerate forms equal the specialized formulas ---

CheckResult c5_degeneracy(const Ctx& ctx) {
  Tally t;
  const Complex one{1.0, 0.0};

  // psi == 1: the general bounds must collapse to the composition formulas
  // max{1, L} <= ||C_phi|| <= max{1, L + tau} with a vanishing sigma.
  std::vector<AnalyticFn> phis;
  phis.push_back(scale({0.5, 0.0}, identity()));
  phis.push_back(automorphism(one, {0.6, 0.0}));
  phis.push_back(rotation_fn({0.0, 1.0}));
  phis.push_back(blaschke_product({{0.0, 0.0}, {0.3, 0.0}}, one));
  phis.push_back(automorphism(std::polar(1.0, 0.7), {0.4, 0.0}));
  phis.push_back(scale({0.0, 0.3}, automorphism(one, {0.2, 0.0})));

  AnalyticFn unit = constant(one);
  int i = 0;
  for (const AnalyticFn& phi : phis) {
    ++i;
    NormBounds nb = wco_norm_bounds(unit, phi, ctx.grid);
    double lt = half_log_ratio(std::abs(phi.eval({0.0, 0.0})));
    double tau = tau_infty(unit, phi, ctx.grid).value;
    double lower_expected = std::max(1.0, lt);
    double upper_expected = std::max(1.0, lt + tau);

    t.track("comp-dev", std::abs(nb.lower - lower_expected));
    t.track("comp-dev", std::abs(nb.upper - upper_expected));
    t.require(std::abs(nb.components.at("bloch_norm_psi") - 1.0) <= 1e-12,
              idx_label("comp-unit-norm", i));
    t.require(nb.components.at("sigma") <= 1e-12, idx_label("comp-sigma", i));
    t.require(std::abs(nb.lower - lower_expected) <= 1e-12,
              idx_label("comp-lower", i));
    t.require(std::abs(nb.upper - upper_expected) <= 1e-12,
              idx_label("comp-upper", i));
  }

  // phi == identity: the multiplier entry point must collapse to
  // max{||psi||_B, ||psi||_inf} <= ||M_psi|| <= max{||psi||_B,
  // ||psi||_inf + sigma}, with the sup norm measured by an independent call.
  std::vector<AnalyticFn> psis;
  psis.push_back(identity());
  psis.push_back(monomial(2));
  psis.push_back(polynomial({{0.3, 0.0}, {0.4, 0.0}}));
  psis.push_back(automorphism(one, {0.5, 0.0}));
  psis.push_back(blaschke_product({{0.0, 0.0}, {0.5, 0.0}}, one));
  psis.push_back(constant({0.7, 0.1}));
  psis.push_back(scale({0.3, 0.0}, automorphism(one, {0.2, 0.0})));
  psis.push_back(blaschke_product({{0.3, 0.0}, {0.0, -0.4}}, one));

  AnalyticFn id = identity();
  i = 0;
  for (const AnalyticFn& psi : psis) {
    ++i;
    NormBounds mb = mult_bounds(psi, ctx.grid);
    double bn = bloch_norm(psi, ctx.grid).norm;
    double sup = sup_norm(psi, ctx.grid).value;
    double sigma = sigma_infty(psi, id, ctx.grid).value;
    double lower_expected = std::max(bn, sup);
    double upper_expected = std::max(bn, sup + sigma);

    t.track("mult-dev", std::abs(mb.lower - lower_expected));
    t.track("mult-dev", std::abs(mb.upper - upper_expected));
    t.require(std::abs(mb.components.at("sup_norm_psi") - sup) <= 1e-12,
              idx_label("mult-sup", i));
    t.require(std::abs(mb.lower - lower_expected) <= 1e-12,
              idx_label("mult-lower", i));
    t.require(std::abs(mb.upper - upper_expected) <= 1e-12,
              idx_label("mult-upper", i));
  }
  return {5, "degeneracy", t.pass(), t.detail()};
}

// --- criterion 6: multiplication isometries in a 30-symbol catalogue ---

CheckResult c6_isometry(const Ctx& ctx) {
  Tally t;
  const Complex one{1.0, 0.0};
  struct Entry {
    AnalyticFn psi;
    bool expect;
    std::string label;
  };
  std::vector<Entry> cat;
  auto put = [&](AnalyticFn f, bool expect, std::string label) {
    cat.push_back({std::move(f), expect, std::move(label)});
  };

  put(constant(one), true, "const-1");
  put(constant({-1.0, 0.0}), true, "const-neg1");
  put(constant({0.0, 1.0}), true, "const-i");
  put(constant(std::polar(1.0, 1.3)), true, "const-e13i");
  put(constant({0.6, 0.8}), true, "const-3-4i-over-5");
  put(multiply(constant({0.0, 1.0}), constant({0.0, -1.0})), true,
      "product-of-constants");
  put(scale(std::polar(1.0, 0.5), constant(one)), true, "scaled-constant");

  put(constant({0.5, 0.0}), false, "const-half");
  put(constant({2.0, 0.0}), false, "const-2");
  put(constant({0.0, 0.0}), false, "const-0");
  put(constant({1.0 + 1e-6, 0.0}), false, "const-1p1e6");
  put(identity(), false, "identity");
  put(monomial(2), false, "z2");
  put(monomial(3), false, "z3");
  put(polynomial({{0.0, 0.0}, {1.0, 0.0}}), false, "poly-z");
  put(polynomial({{0.5, 0.0}}), false, "poly-const-half");
  put(polynomial({{0.3, 0.0}, {0.4, 0.0}}), false, "poly-affine");
  put(blaschke_product({{0.0, 0.0}, {0.5, 0.0}}, one), false, "blaschke-0-05");
  put(blaschke_product({{0.3, 0.0}, {0.0, -0.4}}, one), false, "blaschke-2");
  put(automorphism(one, {0.3, 0.0}), false, "aut-03");
  put(automorphism(std::polar(1.0, 0.2), {0.4, 0.0}), false, "aut-04");
  put(automorphism(one, {0.0, 0.5}), false, "aut-05i");
  put(scale({0.5, 0.0}, identity()), false, "half-z");
  put(scale({2.0, 0.0}, automorphism(one, {0.2, 0.0})), false, "two-aut");
  put(log_test(0.0), false, "logtest");
  put(add(identity(), constant({0.3, 0.0})), false, "z-plus-03");
  put(add(constant({0.6, 0.0}), scale({0.4, 0.0}, monomial(1))), false,
      "affine-sum");
  put(multiply(identity(), identity()), false, "z-times-z");
  put(compose(monomial(2), automorphism(one, {0.3, 0.0})), false, "aut-squared");
  put(compose(automorphism(one, {0.5, 0.0}), automorphism(one, {0.5, 0.0})),
      false, "aut-involution");

  t.require(cat.size() == 30, "catalogue-size");

  for (const Entry& e : cat) {
    IsometryVerdict v = mult_isometry_check(e.psi, ctx.grid);
    t.require(v.is_isometry == e.expect, e.label);
    if (v.is_isometry) {
      double drift = v.evidence.at("max_family_drift");
      t.track("family-drift", drift);
      t.require(drift <= 1e-6, e.label + "-drift");
    }
  }

  for (int n : {1, 2}) {
    IsometryVerdict v = mult_isometry_check(monomial(n), ctx.grid);
    double sq = v.evidence.at("psi_squared_bloch_norm");
    t.track("power-evidence", sq);
    t.require(!v.is_isometry && sq < 1.0, idx_label("power-evidence", n));
  }
  return {6, "isometry-catalogue", t.pass(), t.detail()};
}

// --- criterion 7: rotation spectra, determinants, resolvent solves ---

CheckResult c7_rotation_spectra(const Ctx& ctx) {
  Tally t;
  RotationSpec rot5 = RotationSpec::rational_turns(1, 5);
  SpectrumResult spec = rotation_comp_spectrum(rot5);
  auto* set = std::get_if<FiniteSet>(&spec);
  t.require(set != nullptr && set->points.size() == 5, "fifth-roots-size");
  if (set) {
    for (int k = 0; k < 5; ++k) {
      EigenfunctionCheck check = eigenfunction_check(rot5, k);
      t.track("eigen-residual", check.residual);
      t.require(std::abs(check.eigenvalue - set->points[k]) <= 1e-12,
                idx_label("eigenvalue", k));
      t.require(check.residual < 1e-12, idx_label("eigen-res", k));
    }
  }

  std::mt19937_64 rng = rng_for(ctx, 7);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Complex mu;
      do {
        mu = random_in_disk(rng, 1.5);
      } while (std::abs(std::pow(mu, n) - 1.0) < 1e-3);
      ResolventMatrix rm = resolvent_matrix(n, mu);
      double scale = std::max(1.0, std::abs(rm.determinant_formula));
      double dev = std::abs(rm.determinant - rm.determinant_formula) / scale;
      t.track("det-dev", dev);
      t.require(dev <= 1e-10, idx_label("det", n * 100 + trial));
    }
  }

  std::vector<AnalyticFn> gs;
  gs.push_back(constant({1.0, 0.0}));
  gs.push_back(identity());
  gs.push_back(monomial(2));
  gs.push_back(log_test(0.0));
  for (int n = 1; n <= 8; ++n) {
    RotationSpec rot = RotationSpec::rational_turns(1, n);
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      for (int trial = 0; trial < 5; ++trial) {
        Complex mu;
        do {
          mu = random_in_disk(rng, 1.5);
        } while (std::abs(std::pow(mu, n) - 1.0) <= 0.1);
        ResolventSolve solve = rotation_resolvent_solve(rot, mu, gs[gi]);
        t.track("solve-residual", solve.max_residual);
        t.require(solve.verified && solve.max_residual < 1e-8 &&
                      solve.coefficients.size() == static_cast<std::size_t>(n),
                  idx_label("solve", n * 100 + static_cast<int>(gi) * 10 + trial));
      }
    }
  }

  // Closed-form cross-check: order 2, mu = 3, g = z gives f = -z/4.
  ResolventSolve hand = rotation_resolvent_solve(RotationSpec::rational_turns(1, 2),
                                                 {3.0, 0.0}, identity());
  double hand_err = std::abs(hand.f.eval({0.5, 0.0}) - Complex{-0.125, 0.0});
  t.track("hand-solve-err", hand_err);
  t.require(hand_err <= 1e-12, "hand-solve");
  return {7, "rotation-spectra", t.pass(), t.detail()};
}

// --- criterion 8: multiplication spectra as range closures ---

CheckResult c8_mult_spectra(const Ctx& ctx) {
  Tally t;
  const Complex eta = std::polar(1.0, 1.1);
  SpectrumResult spec = mult_spectrum(constant(eta), ctx.grid);
  auto* cloud = std::get_if<RangeClosure>(&spec);
  t.require(cloud != nullptr && !cloud->samples.empty(), "cloud-shape");
  if (cloud) {
    double dev = 0.0;
    for (const Complex& s : cloud->samples)
      dev = std::max(dev, std::abs(s - eta));
    t.track("cloud-diameter", 2.0 * dev);
    t.require(2.0 * dev < 1e-14, "cloud-diameter");
  }

  MembershipReport out = mult_spectrum_membership(identity(), {2.0, 0.0},
                                                  ctx.grid);
  t.track("resolvent-residual", out.identity_residual);
  t.require(!out.in_spectrum, "lambda-2-out");
  t.require(out.resolvent.has_value() && out.resolvent_verified &&
                out.identity_residual <= 1e-10,
            "lambda-2-resolvent");

  MembershipReport in = mult_spectrum_membership(identity(), {0.5, 0.0},
                                                 ctx.grid);
  t.require(in.in_spectrum, "lambda-half-in");
  return {8, "multiplication-spectra", t.pass(), t.detail()};
}

// --- criterion 9: weighted spectra are rotated rotation spectra ---

CheckResult c9_weighted_spectra(const Ctx& ctx) {
  Tally t;
  std::mt19937_64 rng = rng_for(ctx, 9);
  for (int trial = 0; trial < 5; ++trial) {
    Complex eta = random_unimodular(rng);
    for (long long q : {1, 2, 3, 4, 6}) {
      RotationSpec rot = RotationSpec::rational_turns(1, q);
      SpectrumResult weighted = weighted_iso_spectrum(eta, rot);
      SpectrumResult base = rotation_comp_spectrum(rot);
      auto* wset = std::get_if<FiniteSet>(&weighted);
      auto* bset = std::get_if<FiniteSet>(&base);
      std::ostringstream label;
      label << "eta-" << trial << "-order-" << q;
      if (!wset || !bset || wset->points.size() != bset->points.size() ||
          bset->points.size() != static_cast<std::size_t>(q)) {
        t.require(false, label.str());
        continue;
      }
      double dev = 0.0;
      for (std::size_t k = 0; k < bset->points.size(); ++k)
        dev = std::max(dev, std::abs(wset->points[k] - eta * bset->points[k]));
      t.track("point-dev", dev);
      t.require(dev <= 1e-12, label.str());
    }
  }
  return {9, "weighted-spectra", t.pass(), t.detail()};
}

// --- criterion 10: pointwise inequality and derivative suites ---

CheckResult c10_pointwise(const Ctx& ctx) {
  Tally t;
  const Complex one{1.0, 0.0};
  std::mt19937_64 rng = rng_for(ctx, 10);

  std::vector<Complex> pts;
  pts.reserve(10000);
  while (pts.size() < 10000) {
    Complex z = random_in_disk(rng, 0.995);
    pts.push_back(z);
  }

  struct Cat {
    AnalyticFn f;
    double sup;
    std::string label;
  };
  std::vector<Cat> cat;
  cat.push_back({automorphism(one, {0.3, 0.0}), 1.0, "aut-03"});
  cat.push_back({automorphism(std::polar(1.0, 0.4), {0.0, 0.5}), 1.0, "aut-05i"});
  cat.push_back({automorphism(one, {0.0, 0.85}), 1.0, "aut-085i"});
  cat.push_back(
      {blaschke_product({{0.0, 0.0}, {0.5, 0.0}}, one), 1.0, "blaschke-0-05"});
  cat.push_back(
      {blaschke_product({{0.3, 0.0}, {0.0, -0.4}}, one), 1.0, "blaschke-2"});
  cat.push_back({monomial(1), 1.0, "z"});
  cat.push_back({monomial(3), 1.0, "z3"});
  cat.push_back({constant(std::polar(1.0, kPi / 5.0)), 1.0, "const"});
  cat.push_back({scale({0.5, 0.0}, identity()), 0.5, "half-z"});
  cat.push_back({polynomial({{0.3, 0.0}, {0.4, 0.0}}), 0.7, "affine"});

  for (const Cat& c : cat) {
    PointwiseCheck sp = schwarz_pick_check(c.f, pts, ctx.grid, c.sup);
    t.track("schwarz-pick-violation", sp.max_violation);
    t.require(sp.max_violation <= 1e-9, c.label + "-sp");

    PointwiseCheck gb = growth_bound_check(c.f, pts, ctx.grid);
    t.track("growth-violation", gb.max_violation);
    t.require(gb.max_violation <= 1e-9, c.label + "-growth");
  }

  // Exact derivatives against central differences in both axis directions,
  // one variant per node type.
  std::vector<std::pair<AnalyticFn, std::string>> variants;
  variants.emplace_back(constant({0.3, -0.7}), "const");
  variants.emplace_back(identity(), "identity");
  variants.emplace_back(monomial(4), "monomial");
  variants.emplace_back(polynomial({{0.3, 0.0}, {0.0, 0.0}, {0.0, 0.2}}),
                        "polynomial");
  variants.emplace_back(automorphism(std::polar(1.0, 0.4), {0.0, 0.5}),
                        "automorphism");
  variants.emplace_back(
      blaschke_product({{0.3, 0.0}, {0.0, -0.4}, {0.0, 0.0}}, one), "blaschke");
  variants.emplace_back(log_test(0.7), "logtest");
  variants.emplace_back(add(monomial(2), automorphism(one, {0.3, 0.0})), "sum");
  variants.emplace_back(multiply(identity(), automorphism(one, {0.3, 0.0})),
                        "product");
  variants.emplace_back(scale({0.0, 2.0}, log_test(0.0)), "scale");
  variants.emplace_back(
      compose(automorphism(one, {0.3, 0.0}), scale({0.5, 0.0}, identity())),
      "compose");
  variants.emplace_back(reciprocal_shift(identity(), {2.0, 0.0}),
                        "reciprocal-shift");

  const double h = 1e-6;
  std::vector<Complex> fd_pts = verification_points(1000, 0.99);
  for (const auto& [f, label] : variants) {
    double worst = 0.0;
    for (const Complex& z : fd_pts) {
      Complex exact = f.eval_with_derivative(z).derivative;
      Complex fd_re = (f.eval(z + Complex{h, 0.0}) - f.eval(z - Complex{h, 0.0})) /
                      (2.0 * h);
      Complex fd_im = (f.eval(z + Complex{0.0, h}) - f.eval(z - Complex{0.0, h})) /
                      Complex{0.0, 2.0 * h};
      double denom = 1.0 + std::abs(exact);
      worst = std::max(worst, std::abs(fd_re - exact) / denom);
      worst = std::max(worst, std::abs(fd_im - exact) / denom);
    }
    t.track("fd-rel-err", worst);
    t.require(worst <= 1e-5, label + "-fd");
  }
  return {10, "pointwise-inequalities", t.pass(), t.detail()};
}

}  // namespace

std::vector<CheckResult> run_all(std::uint64_t seed, std::ostream* progress) {
  Ctx ctx{DiskGrid::standard(), seed};
  using Fn = CheckResult (*)(const Ctx&);
  const Fn criteria[] = {c1_logtest,      c2_automorphism,   c3_power_bounds,
                         c4_sandwich,     c5_degeneracy,     c6_isometry,
                         c7_rotation_spectra, c8_mult_spectra, c9_weighted_spectra,
                         c10_pointwise};

  std::vector<CheckResult> results;
  int index = 0;
  for (Fn fn : criteria) {
    ++index;
    CheckResult r;
    try {
      r = fn(ctx);
    } catch (const Error& e) {
      r = {index, "criterion", false,
           std::string("exception (") + e.tag() + "): " + e.what()};
    } catch (const std::exception& e) {
      r = {index, "criterion", false, std::string("exception: ") + e.what()};
    }
    if (progress)
      *progress << (r.pass ? "[PASS] " : "[FAIL] ") << r.criterion << ' '
                << r.name << " — " << r.detail << '\n'
                << std::flush;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  if (results.empty()) return false;
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace blochkit::acceptance
