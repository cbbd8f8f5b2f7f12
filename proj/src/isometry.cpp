#include "blochkit/isometry.hpp"

#include <algorithm>
#include <cmath>

namespace blochkit {

const char* to_string(IsometryReason r) {
  switch (r) {
    case IsometryReason::UnimodularConstant: return "unimodular_constant";
    case IsometryReason::ConstantWrongModulus: return "constant_wrong_modulus";
    case IsometryReason::NotConstant: return "not_constant";
    case IsometryReason::OriginFixedAndZero: return "origin_fixed_and_zero";
    case IsometryReason::SeminormBelowOne: return "seminorm_below_one";
    case IsometryReason::NormDrift: return "norm_drift";
  }
  return "unknown";
}

IsometryVerdict mult_isometry_check(const AnalyticFn& psi,
                                    const DiskGrid& grid) {
  IsometryVerdict v;
  if (auto c = constant_value(psi)) {
    double m = std::abs(*c);
    v.evidence["modulus"] = m;
    if (std::abs(m - 1.0) <= 1e-12) {
      v.is_isometry = true;
      v.reason = IsometryReason::UnimodularConstant;
      // Cross-check: the operator must not move any unit-norm family member.
      TestFamily family = TestFamily::standard({0.0, 0.0}, grid);
      OperatorSpec op = OperatorSpec::multiplication(psi);
      double drift = 0.0;
      for (const AnalyticFn& f : family.members) {
        double before = bloch_norm(f, grid).norm;
        double after = bloch_norm(apply(op, f), grid).norm;
        drift = std::max(drift, std::abs(after - before));
      }
      v.evidence["max_family_drift"] = drift;
    } else {
      v.is_isometry = false;
      v.reason = IsometryReason::ConstantWrongModulus;
    }
    return v;
  }

  v.is_isometry = false;
  NormReport bn = bloch_norm(psi, grid);
  v.evidence["bloch_norm_psi"] = bn.norm;
  double psi0 = std::abs(psi.eval({0.0, 0.0}));
  v.evidence["abs_psi_at_origin"] = psi0;

  if (psi0 <= 1e-12) {
    // A multiplier vanishing at the origin cannot preserve norms: squaring it
    // exposes the defect, so record that norm alongside the verdict.
    NormReport sq = bloch_norm(multiply(psi, psi), grid);
    v.evidence["psi_squared_bloch_norm"] = sq.norm;
    v.reason = bn.norm < 1.0 - 1e-6 ? IsometryReason::SeminormBelowOne
                                    : IsometryReason::OriginFixedAndZero;
  } else if (std::abs(bn.norm - 1.0) > 1e-6) {
    v.reason = IsometryReason::NormDrift;
  } else {
    v.reason = IsometryReason::NotConstant;
  }
  return v;
}

IsometryVerdict comp_isometry_check(const AnalyticFn& phi,
                                    const DiskGrid& grid) {
  SelfMapReport self = is_self_map(phi, grid);
  if (!self.ok)
    throw DomainError("comp_isometry_check: phi is not a self-map of the disk");

  IsometryVerdict v;
  double phi0 = std::abs(phi.eval({0.0, 0.0}));
  SupremumEstimate beta = bloch_seminorm(phi, grid);
  v.evidence["abs_phi_at_origin"] = phi0;
  v.evidence["seminorm"] = beta.value;

  if (phi0 > 1e-12) {
    v.is_isometry = false;
    v.reason = IsometryReason::NormDrift;
  } else if (beta.value < 1.0 - 1e-3) {
    v.is_isometry = false;
    v.reason = IsometryReason::SeminormBelowOne;
  } else if (beta.value > 1.0 + 1e-6) {
    // A self-map cannot exceed seminorm 1; an overshoot past the estimator
    // tolerance means the inputs are inconsistent, not that phi qualifies.
    v.is_isometry = false;
    v.reason = IsometryReason::NormDrift;
  } else {
    v.is_isometry = true;
    v.reason = IsometryReason::OriginFixedAndZero;
  }
  return v;
}

double power_norm_bound(int n) {
  if (n < 2) throw DomainError("power_norm_bound: n must be >= 2");
  double nn = static_cast<double>(n);
  return (2.0 * nn / (nn + 1.0)) *
         std::pow((nn - 1.0) / (nn + 1.0), (nn - 1.0) / 2.0);
}

PowerNormReport power_norm_check(const AnalyticFn& psi, int n_max,
                                 const DiskGrid& grid) {
  if (n_max < 2) throw DomainError("power_norm_check: n_max must be >= 2");
  if (std::abs(psi.eval({0.0, 0.0})) > 1e-12)
    throw DomainError("power_norm_check: psi(0) must vanish");
  double sup = 0.0;
  if (auto known = known_sup_norm(psi))
    sup = *known;
  else
    sup = sup_norm(psi, grid).value;
  if (sup > 1.0 + 1e-9)
    throw DomainError("power_norm_check: psi must map into the closed disk");

  PowerNormReport rep;
  rep.all_within = true;
  AnalyticFn power = psi;
  for (int n = 2; n <= n_max; ++n) {
    power = multiply(power, psi);
    PowerNormRow row;
    row.n = n;
    row.beta = bloch_seminorm(power, grid).value;
    row.bound = power_norm_bound(n);
    if (row.beta > row.bound + 1e-6) rep.all_within = false;
    rep.rows.push_back(row);
  }
  return rep;
}

ZerosLemmaReport zeros_lemma_experiment(const AnalyticFn& psi,
                                        const DiskGrid& grid) {
  ZerosLemmaReport rep;
  AnalyticFn g = multiply(identity(), psi);
  rep.g_norm = bloch_norm(g, grid).norm;
  rep.hypothesis_met = std::abs(rep.g_norm - 1.0) <= 1e-3;
  rep.constant_symbol = constant_value(psi).has_value();
  rep.psi_zero_at_origin = std::abs(psi.eval({0.0, 0.0})) <= 1e-12;

  if (psi.kind() == AnalyticFn::Kind::Blaschke && !rep.constant_symbol) {
    const auto& node = std::get<AnalyticFn::Node::BlaschkeN>(psi.node().v);
    rep.zeros = node.zeros;
    for (const Complex& a : rep.zeros) {
      double s =
          (1.0 - std::norm(a)) * std::abs(psi.eval_with_derivative(a).derivative);
      rep.seminorm_at_zeros.push_back(s);
      rep.max_seminorm_at_zero = std::max(rep.max_seminorm_at_zero, s);
    }
  }
  return rep;
}

ThinBlaschkeSpec build_thin_blaschke(int count, double ray_angle,
                                     double growth) {
  if (count < 2) throw DomainError("thin blaschke: count must be >= 2");
  if (!(growth > 0.0 && growth < 1.0))
    throw DomainError("thin blaschke: growth must lie in (0, 1)");

  std::vector<Complex> zeros;
  zeros.push_back({0.0, 0.0});
  double gap = 0.1;  // 1 - r_1 with r_1 = 0.9
  for (int j = 1; j < count; ++j) {
    double r = 1.0 - gap;
    if (!(r < 1.0))
      throw DomainError("thin blaschke: radius rounded onto the unit circle");
    zeros.push_back(std::polar(r, ray_angle));
    gap *= growth;
  }

  std::vector<double> products;
  double min_sep = 2.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    double p = 1.0;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      if (k == j) continue;
      Complex num = zeros[j] - zeros[k];
      Complex den = Complex{1.0, 0.0} - std::conj(zeros[k]) * zeros[j];
      p *= std::abs(num) / std::abs(den);
    }
    products.push_back(p);
    min_sep = std::min(min_sep, p);
  }

  return ThinBlaschkeSpec{blaschke_product(zeros, {1.0, 0.0}), std::move(zeros),
                          std::move(products), min_sep};
}

}  // namespace blochkit
