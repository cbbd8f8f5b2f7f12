#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "blochkit/disk_grid.hpp"
#include "blochkit/errors.hpp"

namespace blochkit {

struct EvalPair {
  Complex value;
  Complex derivative;
};

// Immutable expression tree for analytic functions on the unit disk.
// Handles are cheap to copy; nodes are shared and never mutated, so
// evaluation is safe from concurrent threads.
//
// Derivatives are structural (exact differentiation of the tree), never
// finite differences.
class AnalyticFn {
 public:
  enum class Kind {
    Const,
    Identity,
    Monomial,
    Polynomial,
    Automorphism,
    Blaschke,
    LogTest,
    Sum,
    Product,
    Scale,
    Compose,
    ReciprocalShift,
  };

  struct Node;

  Kind kind() const;
  const Node& node() const { return *node_; }

  // Value at z. Requires |z| < 1.
  Complex eval(Complex z) const;

  // Value and exact derivative at z. Requires |z| < 1.
  EvalPair eval_with_derivative(Complex z) const;

 private:
  explicit AnalyticFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend AnalyticFn make_fn(Node&& n);
};

struct AnalyticFn::Node {
  struct ConstN {
    Complex c;
  };
  struct IdentityN {};
  struct MonomialN {
    int n;  // n >= 1
  };
  struct PolynomialN {
    std::vector<Complex> coeffs;  // coeffs[k] multiplies z^k
  };
  struct AutomorphismN {
    Complex eta;  // unimodular within 1e-12
    Complex a;    // |a| < 1;  z -> eta (a - z) / (1 - conj(a) z)
  };
  struct BlaschkeN {
    std::vector<Complex> zeros;  // all in the open disk; 0 entries allowed
    Complex eta;                 // unimodular within 1e-12
  };
  struct LogTestN {
    double theta;
    Complex rot;  // exp(-i theta), precomputed
  };
  struct SumN {
    AnalyticFn lhs, rhs;
  };
  struct ProductN {
    AnalyticFn lhs, rhs;
  };
  struct ScaleN {
    Complex c;
    AnalyticFn inner;
  };
  struct ComposeN {
    AnalyticFn outer, inner;
  };
  struct ReciprocalShiftN {
    AnalyticFn inner;
    Complex lambda;  // z -> 1 / (inner(z) - lambda)
  };

  using Payload = std::variant<ConstN, IdentityN, MonomialN, PolynomialN,
                               AutomorphismN, BlaschkeN, LogTestN, SumN,
                               ProductN, ScaleN, ComposeN, ReciprocalShiftN>;
  Payload v;
};

// Constructors. Each validates its parameters and throws DomainError on
// violations (|a| >= 1, non-unimodular eta, monomial degree < 1, ...).
AnalyticFn constant(Complex c);
AnalyticFn identity();
AnalyticFn monomial(int n);
AnalyticFn polynomial(std::vector<Complex> coeffs);
AnalyticFn automorphism(Complex eta, Complex a);
AnalyticFn blaschke_product(std::vector<Complex> zeros, Complex eta);
// z -> (1/2) Log((1 + e^{-i theta} z) / (1 - e^{-i theta} z)), principal branch.
AnalyticFn log_test(double theta);
AnalyticFn add(AnalyticFn lhs, AnalyticFn rhs);
AnalyticFn multiply(AnalyticFn lhs, AnalyticFn rhs);
AnalyticFn scale(Complex c, AnalyticFn inner);
AnalyticFn compose(AnalyticFn outer, AnalyticFn inner);
AnalyticFn reciprocal_shift(AnalyticFn inner, Complex lambda);

// Rotation z -> zeta z as a tree (|zeta| = 1 within 1e-12).
AnalyticFn rotation_fn(Complex zeta);

// Constant value of f if f is structurally constant; nullopt otherwise.
// Purely syntactic: no sampling.
std::optional<Complex> structural_constant(const AnalyticFn& f);

// Constant value of f, deciding structurally first and then by evaluating at
// 64 interior points with deviation tolerance 1e-12.
std::optional<Complex> constant_value(const AnalyticFn& f);

// True if f is syntactically a rotation z -> zeta z; reports zeta.
bool is_structural_rotation(const AnalyticFn& f, Complex* zeta_out = nullptr);

struct SelfMapReport {
  double max_modulus = 0.0;
  Complex witness{0.0, 0.0};
  bool ok = false;  // max |f| over the grid < 1
};

// Grid check that f maps the disk into itself.
SelfMapReport is_self_map(const AnalyticFn& f, const DiskGrid& grid);

}  // namespace blochkit
