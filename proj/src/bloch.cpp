#include "blochkit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace blochkit {

namespace {

constexpr double kCircleGuard = 1.0 - 1e-12;

// Template visitor shared by known_sup_norm.
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double guard_modulus(Complex w, const char* what) {
  double m = std::abs(w);
  if (m >= kCircleGuard)
    throw NumericalOverflow(std::string(what) + ": symbol reached the unit circle");
  return m;
}

}  // namespace

SupremumEstimate bloch_seminorm(const AnalyticFn& f, const DiskGrid& grid) {
  return sup_over_disk(
      [&](Complex z) {
        return (1.0 - std::norm(z)) * std::abs(f.eval_with_derivative(z).derivative);
      },
      grid);
}

NormReport bloch_norm(const AnalyticFn& f, const DiskGrid& grid) {
  NormReport rep;
  rep.abs_at_origin = std::abs(f.eval({0.0, 0.0}));
  rep.seminorm = bloch_seminorm(f, grid);
  rep.norm = rep.abs_at_origin + rep.seminorm.value;
  return rep;
}

SupremumEstimate sup_norm(const AnalyticFn& f, const DiskGrid& grid) {
  return sup_over_disk([&](Complex z) { return std::abs(f.eval(z)); }, grid);
}

std::optional<double> known_sup_norm(const AnalyticFn& f) {
  using Node = AnalyticFn::Node;
  return std::visit(
      Overloaded{
          [](const Node::ConstN& n) -> std::optional<double> {
            return std::abs(n.c);
          },
          [](const Node::IdentityN&) -> std::optional<double> { return 1.0; },
          [](const Node::MonomialN&) -> std::optional<double> { return 1.0; },
          [](const Node::PolynomialN& n) -> std::optional<double> {
            // single-term polynomials only: sup |c z^k| = |c|
            std::optional<double> single;
            for (const Complex& c : n.coeffs) {
              if (c == Complex{0.0, 0.0}) continue;
              if (single) return {};
              single = std::abs(c);
            }
            return single ? single : std::optional<double>(0.0);
          },
          [](const Node::AutomorphismN&) -> std::optional<double> { return 1.0; },
          [](const Node::BlaschkeN&) -> std::optional<double> { return 1.0; },
          [](const Node::ScaleN& n) -> std::optional<double> {
            auto inner = known_sup_norm(n.inner);
            if (!inner) return {};
            return std::abs(n.c) * *inner;
          },
          [](const auto&) -> std::optional<double> { return {}; },
      },
      f.node().v);
}

LittleBlochReport little_bloch_check(const AnalyticFn& f, const DiskGrid& grid) {
  LittleBlochReport rep;
  for (int k = 4; k <= 20; ++k) rep.ring_radii.push_back(1.0 - std::ldexp(1.0, -k));
  rep.ring_maxima = ring_maxima(
      [&](Complex z) {
        return (1.0 - std::norm(z)) * std::abs(f.eval_with_derivative(z).derivative);
      },
      rep.ring_radii, grid.angles_per_ring);

  const auto& m = rep.ring_maxima;
  const double peak = *std::max_element(m.begin(), m.end());
  if (peak <= 1e-12) {
    rep.trending_to_zero = true;
    return rep;
  }
  bool tail_nonincreasing = true;
  for (std::size_t i = m.size() - 5; i + 1 < m.size(); ++i)
    if (m[i + 1] > m[i] + 1e-12) tail_nonincreasing = false;
  rep.trending_to_zero = tail_nonincreasing && m.back() < 0.05 * m.front();
  return rep;
}

PointwiseCheck growth_bound_check(const AnalyticFn& f,
                                  std::span<const Complex> zs,
                                  const DiskGrid& grid) {
  const double beta = bloch_seminorm(f, grid).value;
  const double f0 = std::abs(f.eval({0.0, 0.0}));
  PointwiseCheck check;
  check.max_violation = -std::numeric_limits<double>::infinity();
  for (const Complex& z : zs) {
    double r = std::abs(z);
    double bound = f0 + 0.5 * beta * std::log((1.0 + r) / (1.0 - r));
    double v = std::abs(f.eval(z)) - bound;
    if (v > check.max_violation) {
      check.max_violation = v;
      check.worst_point = z;
    }
  }
  return check;
}

PointwiseCheck schwarz_pick_check(const AnalyticFn& psi,
                                  std::span<const Complex> zs,
                                  const DiskGrid& grid,
                                  std::optional<double> sup_norm_hint) {
  double m = 0.0;
  if (sup_norm_hint)
    m = *sup_norm_hint;
  else if (auto known = known_sup_norm(psi))
    m = *known;
  else
    m = sup_norm(psi, grid).value;
  if (!(m > 0.0)) throw DomainError("schwarz_pick_check: sup norm must be > 0");

  PointwiseCheck check;
  check.max_violation = -std::numeric_limits<double>::infinity();
  for (const Complex& z : zs) {
    EvalPair e = psi.eval_with_derivative(z);
    double lhs = (1.0 - std::norm(z)) * std::abs(e.derivative) / m;
    double rhs = 1.0 - std::norm(e.value) / (m * m);
    double v = lhs - rhs;
    if (v > check.max_violation) {
      check.max_violation = v;
      check.worst_point = z;
    }
  }
  return check;
}

SupremumEstimate tau_infty(const AnalyticFn& psi, const AnalyticFn& phi,
                           const DiskGrid& grid) {
  return sup_over_disk(
      [&](Complex z) {
        EvalPair p = phi.eval_with_derivative(z);
        guard_modulus(p.value, "tau_infty");
        double ratio = (1.0 - std::norm(z)) / (1.0 - std::norm(p.value));
        return ratio * std::abs(psi.eval(z)) * std::abs(p.derivative);
      },
      grid);
}

SupremumEstimate sigma_infty(const AnalyticFn& psi, const AnalyticFn& phi,
                             const DiskGrid& grid) {
  return sup_over_disk(
      [&](Complex z) {
        double aw = guard_modulus(phi.eval(z), "sigma_infty");
        double dpsi = std::abs(psi.eval_with_derivative(z).derivative);
        return 0.5 * (1.0 - std::norm(z)) * dpsi *
               std::log((1.0 + aw) / (1.0 - aw));
      },
      grid);
}

}  // namespace blochkit
