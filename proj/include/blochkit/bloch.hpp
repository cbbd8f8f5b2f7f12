#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blochkit/analytic_fn.hpp"
#include "blochkit/supremum.hpp"

namespace blochkit {

// Bloch seminorm estimate: sup over the disk of (1 - |z|^2) |f'(z)|.
SupremumEstimate bloch_seminorm(const AnalyticFn& f, const DiskGrid& grid);

struct NormReport {
  double norm = 0.0;           // |f(0)| + seminorm
  double abs_at_origin = 0.0;  // |f(0)|
  SupremumEstimate seminorm;
};

// Bloch norm |f(0)| + sup (1 - |z|^2) |f'(z)|.
NormReport bloch_norm(const AnalyticFn& f, const DiskGrid& grid);

// Supremum of |f| over the disk. For functions whose modulus peaks only at
// the boundary the estimate approaches the true value from below.
SupremumEstimate sup_norm(const AnalyticFn& f, const DiskGrid& grid);

// Exact H-infinity norm when it is structurally known: automorphisms,
// Blaschke products, monomials and the identity have norm 1; constants |c|;
// scales multiply. nullopt when no exact value is available.
std::optional<double> known_sup_norm(const AnalyticFn& f);

struct LittleBlochReport {
  std::vector<double> ring_radii;
  std::vector<double> ring_maxima;  // max of (1-|z|^2)|f'(z)| per ring
  bool trending_to_zero = false;
};

// Little-Bloch diagnostic: ring maxima of (1-|z|^2)|f'(z)| at radii
// 1 - 2^-k, k = 4..20. trending_to_zero iff the tail is nonincreasing and the
// last ring is below 5% of the first (identically tiny sequences pass).
LittleBlochReport little_bloch_check(const AnalyticFn& f, const DiskGrid& grid);

struct PointwiseCheck {
  double max_violation = 0.0;  // positive means the inequality failed there
  Complex worst_point{0.0, 0.0};
};

// Growth bound: |f(z)| <= |f(0)| + (1/2) beta_f log((1+|z|)/(1-|z|)).
// Reports the largest violation over zs using the estimated seminorm.
PointwiseCheck growth_bound_check(const AnalyticFn& f,
                                  std::span<const Complex> zs,
                                  const DiskGrid& grid);

// Schwarz-Pick for a bounded symbol scaled to the self-map form:
// (1-|z|^2)|psi'(z)| / M <= 1 - |psi(z)|^2 / M^2 with M = sup |psi|.
// M resolution order: explicit hint, structural known_sup_norm, grid
// estimate. The hint exists because an underestimated M flips the sign of
// the comparison at equality cases.
PointwiseCheck schwarz_pick_check(const AnalyticFn& psi,
                                  std::span<const Complex> zs,
                                  const DiskGrid& grid,
                                  std::optional<double> sup_norm_hint = {});

// Weighted-composition quantities. Both guard |phi(z)| < 1 - 1e-12 and throw
// NumericalOverflow when the symbol reaches the cutoff.
//
// tau: sup (1-|z|^2)/(1-|phi(z)|^2) |psi(z)| |phi'(z)|
SupremumEstimate tau_infty(const AnalyticFn& psi, const AnalyticFn& phi,
                           const DiskGrid& grid);
// sigma: sup (1/2)(1-|z|^2)|psi'(z)| log((1+|phi(z)|)/(1-|phi(z)|))
SupremumEstimate sigma_infty(const AnalyticFn& psi, const AnalyticFn& phi,
                             const DiskGrid& grid);

}  // namespace blochkit
