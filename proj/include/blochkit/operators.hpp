#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "blochkit/bloch.hpp"

namespace blochkit {

enum class OperatorKind { Multiplication, Composition, Weighted };

// Weighted composition operator W f = psi . (f o phi) together with its
// degenerate forms. Multiplication stores phi = identity, composition stores
// psi = 1, so every operation runs through one arithmetic path and the
// degenerate forms agree with the general one to rounding.
class OperatorSpec {
 public:
  static OperatorSpec multiplication(AnalyticFn psi);
  // phi is verified self-map-plausible on the grid; throws DomainError if not.
  static OperatorSpec composition(AnalyticFn phi, const DiskGrid& grid);
  static OperatorSpec weighted(AnalyticFn psi, AnalyticFn phi,
                               const DiskGrid& grid);

  OperatorKind kind() const { return kind_; }
  const AnalyticFn& psi() const { return psi_; }
  const AnalyticFn& phi() const { return phi_; }

 private:
  OperatorSpec(OperatorKind k, AnalyticFn psi, AnalyticFn phi);
  OperatorKind kind_;
  AnalyticFn psi_;
  AnalyticFn phi_;
};

// W f as a tree: multiply(psi, compose(f, phi)).
AnalyticFn apply(const OperatorSpec& op, const AnalyticFn& f);

struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
  // Named ingredients ("bloch_norm_psi", "log_term", "tau", "sigma", ...).
  std::map<std::string, double> components;
};

// Two-sided norm bounds for W:
//   lower = max{ ||psi||_B, (1/2)|psi(0)| log((1+|phi(0)|)/(1-|phi(0)|)) }
//   upper = max{ ||psi||_B, log_term + tau + sigma }
NormBounds wco_norm_bounds(const AnalyticFn& psi, const AnalyticFn& phi,
                           const DiskGrid& grid);
double wco_upper_bound(const AnalyticFn& psi, const AnalyticFn& phi,
                       const DiskGrid& grid);
double wco_lower_bound(const AnalyticFn& psi, const AnalyticFn& phi,
                       const DiskGrid& grid);

// Multiplier bounds, phi = identity specialization (same arithmetic path;
// tau with the identity symbol is exactly the sup-norm integrand):
//   max{ ||psi||_B, ||psi||_inf } <= ||M_psi|| <= max{ ||psi||_B,
//   ||psi||_inf + sigma_psi }
NormBounds mult_bounds(const AnalyticFn& psi, const DiskGrid& grid);

struct BrownShieldsReport {
  double sup_stat = 0.0;  // sup of |psi'(z)| (1-|z|) log(1/(1-|z|))
  bool plausible = false;
  std::vector<double> stat_ring_maxima;
  std::vector<double> sup_ring_maxima;  // ring maxima of |psi|
};

// Multiplier-boundedness heuristic: the statistic's ring maxima and the
// sup-norm ring maxima must both have stopped growing over the last five
// rings (decay passes, growth toward the boundary fails).
BrownShieldsReport brown_shields_check(const AnalyticFn& psi,
                                       const DiskGrid& grid);

struct OhnoZhaoReport {
  SupremumEstimate cond1;  // sup (1-|z|^2)|psi'(z)| log(2/(1-|phi(z)|^2))
  SupremumEstimate cond2;  // tau integrand
  bool plausible = false;  // both stage sequences stabilized
};

OhnoZhaoReport ohno_zhao_check(const AnalyticFn& psi, const AnalyticFn& phi,
                               const DiskGrid& grid);

// Catalogue of unit-Bloch-norm test functions: the constant 1, log tests
// aimed at arg phi(0) and at 8 uniform angles, normalized monomials
// (n = 1,2,3,5,8) and normalized automorphisms. Norms are verified to be
// 1 within 1e-6 at construction.
struct TestFamily {
  std::vector<AnalyticFn> members;
  std::vector<std::string> labels;

  static TestFamily standard(Complex phi0, const DiskGrid& grid);
};

struct EmpiricalLower {
  double best = 0.0;
  std::size_t best_index = 0;
  std::vector<double> norms;  // ||W f||_B per family member
};

// Best Bloch norm of W f over the family: a certified operator-norm lower
// bound up to the 1e-6 family normalization tolerance.
EmpiricalLower empirical_norm_lower(const OperatorSpec& op,
                                    const TestFamily& family,
                                    const DiskGrid& grid);

}  // namespace blochkit
