#include "blochkit/analytic_fn.hpp"

#include <cmath>
#include <utility>

namespace blochkit {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kPoleTol = 1e-14;

void require_unimodular(Complex eta, const char* what) {
  if (std::abs(std::abs(eta) - 1.0) > kUnimodularTol)
    throw DomainError(std::string(what) + ": eta must be unimodular within 1e-12");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

AnalyticFn make_fn(AnalyticFn::Node&& n) {
  return AnalyticFn(std::make_shared<const AnalyticFn::Node>(std::move(n)));
}

AnalyticFn::Kind AnalyticFn::kind() const {
  return static_cast<Kind>(node_->v.index());
}

AnalyticFn constant(Complex c) { return make_fn({AnalyticFn::Node::ConstN{c}}); }

AnalyticFn identity() { return make_fn({AnalyticFn::Node::IdentityN{}}); }

AnalyticFn monomial(int n) {
  if (n < 1) throw DomainError("monomial: degree must be >= 1");
  return make_fn({AnalyticFn::Node::MonomialN{n}});
}

AnalyticFn polynomial(std::vector<Complex> coeffs) {
  return make_fn({AnalyticFn::Node::PolynomialN{std::move(coeffs)}});
}

AnalyticFn automorphism(Complex eta, Complex a) {
  require_unimodular(eta, "automorphism");
  if (std::abs(a) >= 1.0)
    throw DomainError("automorphism: a must lie in the open disk");
  return make_fn({AnalyticFn::Node::AutomorphismN{eta, a}});
}

AnalyticFn blaschke_product(std::vector<Complex> zeros, Complex eta) {
  require_unimodular(eta, "blaschke_product");
  for (const Complex& a : zeros)
    if (std::abs(a) >= 1.0)
      throw DomainError("blaschke_product: zeros must lie in the open disk");
  return make_fn({AnalyticFn::Node::BlaschkeN{std::move(zeros), eta}});
}

AnalyticFn log_test(double theta) {
  return make_fn({AnalyticFn::Node::LogTestN{theta, std::polar(1.0, -theta)}});
}

AnalyticFn add(AnalyticFn lhs, AnalyticFn rhs) {
  return make_fn({AnalyticFn::Node::SumN{std::move(lhs), std::move(rhs)}});
}

AnalyticFn multiply(AnalyticFn lhs, AnalyticFn rhs) {
  return make_fn({AnalyticFn::Node::ProductN{std::move(lhs), std::move(rhs)}});
}

AnalyticFn scale(Complex c, AnalyticFn inner) {
  return make_fn({AnalyticFn::Node::ScaleN{c, std::move(inner)}});
}

AnalyticFn compose(AnalyticFn outer, AnalyticFn inner) {
  return make_fn({AnalyticFn::Node::ComposeN{std::move(outer), std::move(inner)}});
}

AnalyticFn reciprocal_shift(AnalyticFn inner, Complex lambda) {
  return make_fn({AnalyticFn::Node::ReciprocalShiftN{std::move(inner), lambda}});
}

AnalyticFn rotation_fn(Complex zeta) {
  require_unimodular(zeta, "rotation_fn");
  return scale(zeta, identity());
}

namespace {

using Node = AnalyticFn::Node;

Complex eval_impl(const AnalyticFn& f, Complex z);

EvalPair eval_deriv_impl(const AnalyticFn& f, Complex z) {
  return std::visit(
      Overloaded{
          [&](const Node::ConstN& n) -> EvalPair { return {n.c, {0.0, 0.0}}; },
          [&](const Node::IdentityN&) -> EvalPair { return {z, {1.0, 0.0}}; },
          [&](const Node::MonomialN& n) -> EvalPair {
            Complex zm{1.0, 0.0};  // z^{n-1}
            for (int i = 0; i < n.n - 1; ++i) zm *= z;
            return {zm * z, static_cast<double>(n.n) * zm};
          },
          [&](const Node::PolynomialN& n) -> EvalPair {
            Complex v{0.0, 0.0}, d{0.0, 0.0};
            for (std::size_t i = n.coeffs.size(); i-- > 0;) {
              d = d * z + v;
              v = v * z + n.coeffs[i];
            }
            return {v, d};
          },
          [&](const Node::AutomorphismN& n) -> EvalPair {
            Complex den = 1.0 - std::conj(n.a) * z;
            Complex v = n.eta * (n.a - z) / den;
            Complex d = n.eta * (std::norm(n.a) - 1.0) / (den * den);
            return {v, d};
          },
          [&](const Node::BlaschkeN& n) -> EvalPair {
            // forward product rule: (P f)' = P' f + P f'
            Complex value = n.eta, deriv{0.0, 0.0};
            for (const Complex& a : n.zeros) {
              Complex fv, fd;
              if (a == Complex{0.0, 0.0}) {
                fv = z;
                fd = {1.0, 0.0};
              } else {
                Complex den = 1.0 - std::conj(a) * z;
                fv = (a - z) / den;
                fd = (std::norm(a) - 1.0) / (den * den);
              }
              deriv = deriv * fv + value * fd;
              value = value * fv;
            }
            return {value, deriv};
          },
          [&](const Node::LogTestN& n) -> EvalPair {
            Complex w = n.rot * z;
            Complex u = (1.0 + w) / (1.0 - w);
            Complex v = 0.5 * std::log(u);
            Complex d = n.rot / ((1.0 - w) * (1.0 + w));
            return {v, d};
          },
          [&](const Node::SumN& n) -> EvalPair {
            EvalPair a = eval_deriv_impl(n.lhs, z), b = eval_deriv_impl(n.rhs, z);
            return {a.value + b.value, a.derivative + b.derivative};
          },
          [&](const Node::ProductN& n) -> EvalPair {
            EvalPair a = eval_deriv_impl(n.lhs, z), b = eval_deriv_impl(n.rhs, z);
            return {a.value * b.value,
                    a.derivative * b.value + a.value * b.derivative};
          },
          [&](const Node::ScaleN& n) -> EvalPair {
            EvalPair a = eval_deriv_impl(n.inner, z);
            return {n.c * a.value, n.c * a.derivative};
          },
          [&](const Node::ComposeN& n) -> EvalPair {
            EvalPair in = eval_deriv_impl(n.inner, z);
            if (std::norm(in.value) >= 1.0)
              throw DomainError("compose: inner value left the unit disk");
            EvalPair out = eval_deriv_impl(n.outer, in.value);
            return {out.value, out.derivative * in.derivative};
          },
          [&](const Node::ReciprocalShiftN& n) -> EvalPair {
            EvalPair in = eval_deriv_impl(n.inner, z);
            Complex den = in.value - n.lambda;
            if (std::abs(den) < kPoleTol)
              throw PoleError("reciprocal_shift: denominator below 1e-14");
            Complex v = 1.0 / den;
            return {v, -in.derivative * v * v};
          },
      },
      f.node().v);
}

Complex eval_impl(const AnalyticFn& f, Complex z) {
  return std::visit(
      Overloaded{
          [&](const Node::ConstN& n) -> Complex { return n.c; },
          [&](const Node::IdentityN&) -> Complex { return z; },
          [&](const Node::MonomialN& n) -> Complex {
            Complex v{1.0, 0.0};
            for (int i = 0; i < n.n; ++i) v *= z;
            return v;
          },
          [&](const Node::PolynomialN& n) -> Complex {
            Complex v{0.0, 0.0};
            for (std::size_t i = n.coeffs.size(); i-- > 0;) v = v * z + n.coeffs[i];
            return v;
          },
          [&](const Node::AutomorphismN& n) -> Complex {
            return n.eta * (n.a - z) / (1.0 - std::conj(n.a) * z);
          },
          [&](const Node::BlaschkeN& n) -> Complex {
            Complex v = n.eta;
            for (const Complex& a : n.zeros) {
              if (a == Complex{0.0, 0.0})
                v *= z;
              else
                v *= (a - z) / (1.0 - std::conj(a) * z);
            }
            return v;
          },
          [&](const Node::LogTestN& n) -> Complex {
            Complex w = n.rot * z;
            return 0.5 * std::log((1.0 + w) / (1.0 - w));
          },
          [&](const Node::SumN& n) -> Complex {
            return eval_impl(n.lhs, z) + eval_impl(n.rhs, z);
          },
          [&](const Node::ProductN& n) -> Complex {
            return eval_impl(n.lhs, z) * eval_impl(n.rhs, z);
          },
          [&](const Node::ScaleN& n) -> Complex { return n.c * eval_impl(n.inner, z); },
          [&](const Node::ComposeN& n) -> Complex {
            Complex w = eval_impl(n.inner, z);
            if (std::norm(w) >= 1.0)
              throw DomainError("compose: inner value left the unit disk");
            return eval_impl(n.outer, w);
          },
          [&](const Node::ReciprocalShiftN& n) -> Complex {
            Complex den = eval_impl(n.inner, z) - n.lambda;
            if (std::abs(den) < kPoleTol)
              throw PoleError("reciprocal_shift: denominator below 1e-14");
            return 1.0 / den;
          },
      },
      f.node().v);
}

void require_in_disk(Complex z) {
  if (!(std::norm(z) < 1.0)) throw DomainError("eval: |z| must be < 1");
}

}  // namespace

Complex AnalyticFn::eval(Complex z) const {
  require_in_disk(z);
  return eval_impl(*this, z);
}

EvalPair AnalyticFn::eval_with_derivative(Complex z) const {
  require_in_disk(z);
  return eval_deriv_impl(*this, z);
}

std::optional<Complex> structural_constant(const AnalyticFn& f) {
  return std::visit(
      Overloaded{
          [](const Node::ConstN& n) -> std::optional<Complex> { return n.c; },
          [](const Node::IdentityN&) -> std::optional<Complex> { return {}; },
          [](const Node::MonomialN&) -> std::optional<Complex> { return {}; },
          [](const Node::PolynomialN& n) -> std::optional<Complex> {
            for (std::size_t i = 1; i < n.coeffs.size(); ++i)
              if (n.coeffs[i] != Complex{0.0, 0.0}) return {};
            return n.coeffs.empty() ? Complex{0.0, 0.0} : n.coeffs[0];
          },
          [](const Node::AutomorphismN&) -> std::optional<Complex> { return {}; },
          [](const Node::BlaschkeN& n) -> std::optional<Complex> {
            if (n.zeros.empty()) return n.eta;
            return {};
          },
          [](const Node::LogTestN&) -> std::optional<Complex> { return {}; },
          [](const Node::SumN& n) -> std::optional<Complex> {
            auto a = structural_constant(n.lhs);
            if (!a) return {};
            auto b = structural_constant(n.rhs);
            if (!b) return {};
            return *a + *b;
          },
          [](const Node::ProductN& n) -> std::optional<Complex> {
            auto a = structural_constant(n.lhs);
            if (!a) return {};
            auto b = structural_constant(n.rhs);
            if (!b) return {};
            return *a * *b;
          },
          [](const Node::ScaleN& n) -> std::optional<Complex> {
            auto a = structural_constant(n.inner);
            if (!a) return {};
            return n.c * *a;
          },
          [](const Node::ComposeN& n) -> std::optional<Complex> {
            auto outer = structural_constant(n.outer);
            if (outer) return outer;
            auto inner = structural_constant(n.inner);
            if (inner && std::norm(*inner) < 1.0) return n.outer.eval(*inner);
            return {};
          },
          [](const Node::ReciprocalShiftN& n) -> std::optional<Complex> {
            auto inner = structural_constant(n.inner);
            if (!inner) return {};
            Complex den = *inner - n.lambda;
            if (std::abs(den) < kPoleTol)
              throw PoleError("reciprocal_shift: denominator below 1e-14");
            return 1.0 / den;
          },
      },
      f.node().v);
}

std::optional<Complex> constant_value(const AnalyticFn& f) {
  if (auto c = structural_constant(f)) return c;
  // 64-point fallback: 8 radii x 8 angles against the value at 0.
  Complex ref = f.eval({0.0, 0.0});
  constexpr double kTol = 1e-12;
  for (int i = 1; i <= 8; ++i) {
    double r = 0.1 * i;
    for (int j = 0; j < 8; ++j) {
      Complex z = std::polar(r, 2.0 * M_PI * j / 8.0);
      if (std::abs(f.eval(z) - ref) > kTol) return {};
    }
  }
  return ref;
}

bool is_structural_rotation(const AnalyticFn& f, Complex* zeta_out) {
  auto emit = [&](Complex zeta) {
    if (std::abs(std::abs(zeta) - 1.0) > kUnimodularTol) return false;
    if (zeta_out) *zeta_out = zeta;
    return true;
  };
  return std::visit(
      Overloaded{
          [&](const Node::IdentityN&) { return emit({1.0, 0.0}); },
          [&](const Node::MonomialN& n) {
            return n.n == 1 && emit({1.0, 0.0});
          },
          [&](const Node::PolynomialN& n) {
            if (n.coeffs.size() != 2 || n.coeffs[0] != Complex{0.0, 0.0})
              return false;
            return emit(n.coeffs[1]);
          },
          [&](const Node::BlaschkeN& n) {
            return n.zeros.size() == 1 && n.zeros[0] == Complex{0.0, 0.0} &&
                   emit(n.eta);
          },
          [&](const Node::ScaleN& n) {
            Complex inner_zeta;
            if (!is_structural_rotation(n.inner, &inner_zeta)) return false;
            return emit(n.c * inner_zeta);
          },
          [&](const auto&) { return false; },
      },
      f.node().v);
}

SelfMapReport is_self_map(const AnalyticFn& f, const DiskGrid& grid) {
  SelfMapReport rep;
  for (const Complex& z : grid.points()) {
    double m = std::abs(f.eval(z));
    if (!std::isfinite(m))
      throw NumericalOverflow("is_self_map: non-finite modulus");
    if (m > rep.max_modulus) {
      rep.max_modulus = m;
      rep.witness = z;
    }
  }
  rep.ok = rep.max_modulus < 1.0;
  return rep;
}

}  // namespace blochkit
