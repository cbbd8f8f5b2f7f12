#pragma once

#include <map>
#include <string>
#include <vector>

#include "blochkit/operators.hpp"

namespace blochkit {

// Reason tags name the decisive property behind a verdict (for either
// operator kind); they are consistent with is_isometry but not exclusive
// to one value of it. origin_fixed_and_zero accepts a composition symbol
// (phi(0) = 0 is required there) and rejects a multiplier (a vanishing
// multiplier at the origin rules the isometry out).
enum class IsometryReason {
  UnimodularConstant,
  ConstantWrongModulus,
  NotConstant,
  OriginFixedAndZero,
  SeminormBelowOne,
  NormDrift,
};

const char* to_string(IsometryReason r);

struct IsometryVerdict {
  bool is_isometry = false;
  IsometryReason reason = IsometryReason::NotConstant;
  std::map<std::string, double> evidence;
};

// M_psi is an isometry iff psi is a unimodular constant. Constancy is decided
// structurally first, then by 64-point sampling with 1e-12 tolerance. When
// the verdict is positive the evidence includes the largest norm drift
// max_f | ||M_psi f||_B - ||f||_B | over the standard test family; when psi
// vanishes at the origin the evidence includes ||psi^2||_B.
IsometryVerdict mult_isometry_check(const AnalyticFn& psi, const DiskGrid& grid);

// C_phi is an isometry iff phi(0) = 0 (within 1e-12) and the seminorm
// estimate lands in [1 - 1e-3, 1 + 1e-6]. Throws DomainError when phi fails
// the self-map grid check.
IsometryVerdict comp_isometry_check(const AnalyticFn& phi, const DiskGrid& grid);

// b(n) = (2n/(n+1)) ((n-1)/(n+1))^((n-1)/2), the power seminorm bound.
// Requires n >= 2. b(n) < 1 for all n >= 2; the sequence decreases toward
// 2/e, and the bound is attained by psi(z) = z.
double power_norm_bound(int n);

struct PowerNormRow {
  int n;
  double beta;   // seminorm estimate of psi^n
  double bound;  // b(n)
};

struct PowerNormReport {
  std::vector<PowerNormRow> rows;
  bool all_within = false;  // every beta <= bound + 1e-6
};

// Seminorms of psi^n for n = 2..n_max against b(n). Requires psi(0) = 0
// within 1e-12 and sup |psi| <= 1 + 1e-9 (DomainError otherwise).
PowerNormReport power_norm_check(const AnalyticFn& psi, int n_max,
                                 const DiskGrid& grid);

struct ZerosLemmaReport {
  double g_norm = 0.0;          // || z psi(z) ||_B
  bool hypothesis_met = false;  // g_norm within 1e-3 of 1
  bool constant_symbol = false;
  bool psi_zero_at_origin = false;
  std::vector<Complex> zeros;              // when psi is a Blaschke product
  std::vector<double> seminorm_at_zeros;   // (1-|a|^2)|psi'(a)| per zero
  double max_seminorm_at_zero = 0.0;
};

// Experiment around g(z) = z psi(z): when ||g||_B is within 1e-3 of 1 and psi
// is a nonconstant Blaschke product, lists the zeros together with the exact
// seminorm integrand value at each zero.
ZerosLemmaReport zeros_lemma_experiment(const AnalyticFn& psi,
                                        const DiskGrid& grid);

struct ThinBlaschkeSpec {
  AnalyticFn product;
  std::vector<Complex> zeros;
  std::vector<double> separation_products;  // p_j = prod_{k != j} rho(a_j, a_k)
  double min_separation = 0.0;
};

// Blaschke product with zeros 0 and r_j e^{i ray_angle} where r_1 = 0.9 and
// 1 - r_{j+1} = growth (1 - r_j). count is the total number of zeros
// (count >= 2); growth in (0, 1). Throws DomainError when a radius would
// round onto the unit circle. Separation products use the pseudo-hyperbolic
// distance rho(a, b) = |(a - b)/(1 - conj(a) b)|.
ThinBlaschkeSpec build_thin_blaschke(int count, double ray_angle, double growth);

}  // namespace blochkit
