#include "blochkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace blochkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_unimodular(Complex eta, const char* who) {
  if (std::abs(std::abs(eta) - 1.0) > 1e-12)
    throw DomainError(std::string(who) + ": weight must be unimodular");
}

Complex mu_power(Complex mu, long long n) {
  Complex acc{1.0, 0.0};
  for (long long i = 0; i < n; ++i) acc *= mu;
  return acc;
}

}  // namespace

RotationSpec RotationSpec::rational_turns(long long p, long long q) {
  if (q < 1) throw DomainError("rotation: q must be >= 1");
  long long pn = ((p % q) + q) % q;
  long long g = std::gcd(pn, q);
  if (g == 0) g = q;  // pn == 0: collapse to the identity rotation
  RotationSpec r;
  r.rational_ = true;
  r.p_ = pn / g;
  r.q_ = q / g;
  r.angle_ = kTwoPi * static_cast<double>(r.p_) / static_cast<double>(r.q_);
  return r;
}

RotationSpec RotationSpec::irrational_angle(double angle) {
  if (!std::isfinite(angle)) throw DomainError("rotation: angle must be finite");
  RotationSpec r;
  r.rational_ = false;
  r.p_ = 0;
  r.q_ = 1;
  r.angle_ = angle;
  return r;
}

Complex RotationSpec::zeta_power(long long k) const {
  if (rational_) {
    long long km = ((k % q_) + q_) % q_;
    long long e = static_cast<long long>(
        (static_cast<__int128>(p_) * km) % static_cast<__int128>(q_));
    return std::polar(1.0, kTwoPi * static_cast<double>(e) /
                               static_cast<double>(q_));
  }
  return std::polar(1.0, angle_ * static_cast<double>(k));
}

std::optional<long long> RotationSpec::order() const {
  if (rational_) return q_;
  return std::nullopt;
}

std::optional<long long> order_of(const RotationSpec& rot) {
  return rot.order();
}

SpectrumResult mult_spectrum(const AnalyticFn& psi, const DiskGrid& grid) {
  RangeClosure out;
  for (const Complex& z : grid.points()) out.samples.push_back(psi.eval(z));
  double r = grid.radii.back();
  int n = grid.angles_per_ring;
  for (int j = 0; j < n; ++j)
    out.boundary_samples.push_back(psi.eval(std::polar(r, kTwoPi * j / n)));
  return out;
}

MembershipReport mult_spectrum_membership(const AnalyticFn& psi, Complex lambda,
                                          const DiskGrid& grid, double margin) {
  if (!(margin > 0.0))
    throw DomainError("mult_spectrum_membership: margin must be positive");
  MembershipReport rep;
  double dist = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points())
    dist = std::min(dist, std::abs(psi.eval(z) - lambda));
  rep.distance = dist;
  if (dist <= margin) {
    rep.in_spectrum = true;
    return rep;
  }

  try {
    AnalyticFn g = reciprocal_shift(psi, lambda);
    double res = 0.0;
    for (const Complex& z : verification_points(200)) {
      Complex prod = (psi.eval(z) - lambda) * g.eval(z);
      res = std::max(res, std::abs(prod - Complex{1.0, 0.0}));
    }
    rep.identity_residual = res;
    rep.resolvent_verified = res <= 1e-10;
    rep.resolvent_plausible = brown_shields_check(g, grid).plausible;
    rep.resolvent = std::move(g);
    rep.in_spectrum = false;
  } catch (const PoleError&) {
    // The sample cloud missed a point where psi - lambda degenerates; the
    // pole is a membership certificate in itself.
    rep.in_spectrum = true;
    rep.resolvent.reset();
    rep.resolvent_verified = false;
  }
  return rep;
}

SpectrumResult rotation_comp_spectrum(const RotationSpec& rot) {
  if (auto n = rot.order()) {
    FiniteSet set;
    for (long long k = 0; k < *n; ++k) set.points.push_back(rot.zeta_power(k));
    return set;
  }
  return UnitCircle{};
}

SpectrumResult nonrotation_comp_spectrum(const AnalyticFn& phi,
                                         const DiskGrid& grid) {
  IsometryVerdict verdict = comp_isometry_check(phi, grid);
  if (!verdict.is_isometry)
    throw DomainError("nonrotation_comp_spectrum: symbol is not isometric");
  if (is_structural_rotation(phi))
    throw DomainError(
        "nonrotation_comp_spectrum: symbol is a rotation; use the rotation "
        "routine");

  // Non-invertibility witness: an origin-fixing self-map that is not a
  // rotation contracts strictly somewhere (and only automorphisms, which fix
  // the origin exactly when they are rotations, avoid that).
  double best_ratio = std::numeric_limits<double>::infinity();
  Complex best_z{0.0, 0.0};
  for (const Complex& z : grid.points()) {
    double ratio = std::abs(phi.eval(z)) / std::abs(z);
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_z = z;
    }
  }
  std::ostringstream note;
  note << "strict contraction |phi(z)|/|z| = " << best_ratio << " at z = ("
       << best_z.real() << ", " << best_z.imag()
       << "): the symbol is no automorphism, so the operator has no bounded "
          "inverse";
  return ClosedUnitDisk{note.str()};
}

ResolventMatrix resolvent_matrix(int n, Complex mu) {
  if (n < 2) throw DomainError("resolvent_matrix: n must be >= 2");
  Complex mun = mu_power(mu, n);
  if (std::abs(mun - Complex{1.0, 0.0}) < 1e-12)
    throw SingularMatrix("resolvent_matrix: mu^n - 1 vanishes");

  ResolventMatrix out;
  out.matrix = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) out.matrix(i, i) = -mu;
  for (int i = 0; i + 1 < n; ++i) out.matrix(i, i + 1) = Complex{1.0, 0.0};
  out.matrix(n - 1, 0) = Complex{1.0, 0.0};

  out.determinant = out.matrix.determinant();
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  out.determinant_formula = sign * (mun - Complex{1.0, 0.0});

  double scale = std::max(1.0, std::abs(out.determinant_formula));
  if (std::abs(out.determinant - out.determinant_formula) > 1e-10 * scale)
    throw NumericalOverflow(
        "resolvent_matrix: generic determinant disagrees with the closed "
        "form");
  return out;
}

ResolventSolve rotation_resolvent_solve(const RotationSpec& rot, Complex mu,
                                        const AnalyticFn& g) {
  if (!rot.rational())
    throw DomainError(
        "rotation_resolvent_solve: needs a rotation of finite order");
  long long n = *rot.order();
  Complex mun = mu_power(mu, n);
  Complex denom = Complex{1.0, 0.0} - mun;
  if (std::abs(denom) < 1e-12)
    throw SingularMatrix("rotation_resolvent_solve: mu^n - 1 vanishes");

  ResolventSolve out{scale(Complex{1.0, 0.0} / denom, g), {}, 0.0, false};
  if (n == 1) {
    out.coefficients.push_back(Complex{1.0, 0.0} / denom);
  } else {
    // f(z) = sum_j mu^{n-1-j} g(zeta^j z) / (1 - mu^n). Telescoping kills
    // every coefficient of g(zeta^k z) except k = 0, which collapses to 1.
    std::vector<Complex> coeffs(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j)
      coeffs[static_cast<std::size_t>(j)] = mu_power(mu, n - 1 - j) / denom;
    AnalyticFn f = scale(coeffs[0], g);
    for (long long j = 1; j < n; ++j)
      f = add(f, scale(coeffs[static_cast<std::size_t>(j)],
                       compose(g, rotation_fn(rot.zeta_power(j)))));
    out.f = std::move(f);
    out.coefficients = std::move(coeffs);
  }

  Complex zeta = rot.zeta();
  double res = 0.0;
  for (const Complex& z : verification_points(200)) {
    Complex lhs = out.f.eval(zeta * z) - mu * out.f.eval(z);
    res = std::max(res, std::abs(lhs - g.eval(z)));
  }
  out.max_residual = res;
  if (res >= 1e-8)
    throw NumericalOverflow(
        "rotation_resolvent_solve: residual failed the 1e-8 contract");
  out.verified = true;
  return out;
}

EigenfunctionCheck eigenfunction_check(const RotationSpec& rot, int k) {
  if (k < 0) throw DomainError("eigenfunction_check: k must be >= 0");
  EigenfunctionCheck check;
  check.eigenvalue = rot.zeta_power(k);
  AnalyticFn fk = (k == 0) ? constant({1.0, 0.0}) : monomial(k);
  AnalyticFn cf = compose(fk, rot.as_fn());
  double res = 0.0;
  for (const Complex& z : verification_points(200))
    res = std::max(res, std::abs(cf.eval(z) - check.eigenvalue * fk.eval(z)));
  check.residual = res;
  return check;
}

SpectrumResult weighted_iso_spectrum(Complex eta, const RotationSpec& rot) {
  require_unimodular(eta, "weighted_iso_spectrum");
  SpectrumResult base = rotation_comp_spectrum(rot);
  if (auto* set = std::get_if<FiniteSet>(&base)) {
    for (Complex& p : set->points) p *= eta;
    return base;
  }
  return UnitCircle{};  // a unimodular weight maps the circle onto itself
}

SpectrumResult weighted_iso_spectrum(Complex eta, const AnalyticFn& phi,
                                     const DiskGrid& grid) {
  require_unimodular(eta, "weighted_iso_spectrum");
  SpectrumResult base = nonrotation_comp_spectrum(phi, grid);
  // eta times the closed disk is the closed disk; the witness carries over.
  return base;
}

std::vector<Complex> verification_points(int count, double max_radius) {
  if (count < 1) throw DomainError("verification_points: count must be >= 1");
  if (!(max_radius > 0.0 && max_radius < 1.0))
    throw DomainError("verification_points: max_radius must lie in (0, 1)");
  const double golden_angle = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double r = max_radius * std::sqrt((i + 0.5) / count);
    pts.push_back(std::polar(r, golden_angle * i));
  }
  return pts;
}

}  // namespace blochkit
