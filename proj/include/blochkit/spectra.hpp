#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blochkit/isometry.hpp"

namespace blochkit {

// Rotation symbol z -> zeta z with the arithmetic nature of the angle
// declared by the caller: zeta = exp(2 pi i p/q) (reduced, q >= 1) or
// zeta = exp(i angle) treated as of infinite order. Rationality is never
// inferred from floating-point values.
class RotationSpec {
 public:
  static RotationSpec rational_turns(long long p, long long q);
  static RotationSpec irrational_angle(double angle);

  bool rational() const { return rational_; }
  long long p() const { return p_; }
  long long q() const { return q_; }
  double angle() const { return angle_; }

  Complex zeta() const { return zeta_power(1); }
  // zeta^k with mod-q reduction in the rational case (exactly unimodular
  // up to rounding of polar()).
  Complex zeta_power(long long k) const;

  // q for rational rotations; nullopt (infinite order) otherwise.
  std::optional<long long> order() const;

  AnalyticFn as_fn() const { return rotation_fn(zeta()); }

 private:
  RotationSpec() = default;
  bool rational_ = true;
  long long p_ = 0, q_ = 1;
  double angle_ = 0.0;
};

std::optional<long long> order_of(const RotationSpec& rot);

struct FiniteSet {
  std::vector<Complex> points;
};
struct UnitCircle {};
struct ClosedUnitDisk {
  std::string note;
};
struct RangeClosure {
  std::vector<Complex> samples;           // psi over the full grid
  std::vector<Complex> boundary_samples;  // psi over the outermost ring
};

using SpectrumResult =
    std::variant<FiniteSet, UnitCircle, ClosedUnitDisk, RangeClosure>;

// Multiplier spectrum: the closure of the range, reported as sample clouds.
SpectrumResult mult_spectrum(const AnalyticFn& psi, const DiskGrid& grid);

struct MembershipReport {
  bool in_spectrum = false;
  double distance = 0.0;  // min over samples of |psi(z) - lambda|
  std::optional<AnalyticFn> resolvent;  // 1/(psi - lambda) when separated
  bool resolvent_verified = false;  // (psi - lambda) g = 1 within 1e-10
  double identity_residual = 0.0;   // max |(psi(z)-lambda) g(z) - 1|
  bool resolvent_plausible = false; // brown_shields_check on g
};

// lambda membership in the multiplier spectrum with separation margin.
// The resolvent tree is only constructed after the range stays at least
// `margin` away from lambda; a PoleError racing that check is reported as
// membership.
MembershipReport mult_spectrum_membership(const AnalyticFn& psi, Complex lambda,
                                          const DiskGrid& grid,
                                          double margin = 1e-3);

// Spectrum of C_phi for a rotation symbol: the cyclic group generated by
// zeta when the order is finite, the unit circle otherwise.
SpectrumResult rotation_comp_spectrum(const RotationSpec& rot);

// Spectrum of C_phi for an isometric non-rotation symbol: the closed unit
// disk. Requires comp_isometry_check to accept phi and phi not to be a
// structural rotation (DomainError otherwise). The note records the
// non-invertibility witness.
SpectrumResult nonrotation_comp_spectrum(const AnalyticFn& phi,
                                         const DiskGrid& grid);

// Structured resolvent system matrix for order n >= 2: -mu on the diagonal,
// 1 on the superdiagonal, 1 in the bottom-left corner. The determinant is
// computed generically and checked against (-1)^n (mu^n - 1) to 1e-10
// relative. Throws SingularMatrix when |mu^n - 1| < 1e-12.
struct ResolventMatrix {
  Eigen::MatrixXcd matrix;
  Complex determinant;          // from the generic routine
  Complex determinant_formula;  // (-1)^n (mu^n - 1)
};
ResolventMatrix resolvent_matrix(int n, Complex mu);

struct ResolventSolve {
  AnalyticFn f;
  std::vector<Complex> coefficients;  // f = sum_j c_j g(zeta^{j-1} z)
  double max_residual = 0.0;  // sup |f(zeta z) - mu f(z) - g(z)| on the
                              // verification points
  bool verified = false;      // residual < 1e-8 (enforced)
};

// Solve (C_phi - mu) f = g for a rational rotation of order n. Order 1
// bypasses the matrix machinery (f = g/(1-mu)). The residual check is part
// of the contract: a solve that fails it throws NumericalOverflow.
ResolventSolve rotation_resolvent_solve(const RotationSpec& rot, Complex mu,
                                        const AnalyticFn& g);

struct EigenfunctionCheck {
  Complex eigenvalue;    // zeta^k
  double residual = 0.0; // sup |(C_phi z^k)(z) - zeta^k z^k|
};

// z^k is an eigenfunction of C_{zeta z} with eigenvalue zeta^k; reports the
// evaluation residual over the verification points. k >= 0.
EigenfunctionCheck eigenfunction_check(const RotationSpec& rot, int k);

// Spectrum of eta C_phi for |eta| = 1: eta times the rotation spectrum
// (pointwise) in the rotation case, the closed unit disk for isometric
// non-rotations (lambda lies in the weighted spectrum iff lambda/eta lies in
// the composition spectrum).
SpectrumResult weighted_iso_spectrum(Complex eta, const RotationSpec& rot);
SpectrumResult weighted_iso_spectrum(Complex eta, const AnalyticFn& phi,
                                     const DiskGrid& grid);

// Deterministic low-discrepancy interior points (sunflower spiral) used for
// residual and identity verification.
std::vector<Complex> verification_points(int count, double max_radius = 0.9);

}  // namespace blochkit
