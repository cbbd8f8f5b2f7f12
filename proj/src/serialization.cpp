#include "blochkit/serialization.hpp"

#include <sstream>

namespace blochkit {

namespace {

const json& require_field(const json& j, const char* key,
                          const std::string& where) {
  if (!j.is_object())
    throw DomainError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw DomainError(where + ": missing field '" + key + "'");
  return *it;
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw DomainError(where + ": expected a number");
  return j.get<double>();
}

long long require_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw DomainError(where + ": expected an integer");
  return j.get<long long>();
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw DomainError(where + ": expected a string");
  return j.get<std::string>();
}

json fns_to_json(const std::vector<Complex>& zs) {
  json arr = json::array();
  for (const Complex& z : zs) arr.push_back(complex_to_json(z));
  return arr;
}

bool csv_scalar(const json& j) {
  return j.is_number() || j.is_boolean() || j.is_string();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_value(const json& j) {
  if (j.is_string()) return csv_escape(j.get<std::string>());
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  std::ostringstream os;
  os.precision(17);
  os << j.get<double>();
  return os.str();
}

void csv_walk(const json& j, const std::string& path, std::ostringstream& out) {
  if (csv_scalar(j)) {
    out << path << ',' << csv_value(j) << '\n';
    return;
  }
  if (j.is_array()) {
    for (const json& e : j)
      if (!csv_scalar(e)) return;  // clouds and nested structures stay JSON-only
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::ostringstream idx;
      idx << path << '.' << i;
      csv_walk(j[i], idx.str(), out);
    }
    return;
  }
  if (j.is_object()) {
    // Function trees and rotation specs are kind-tagged nodes; they do not
    // flatten into scalar rows.
    if (j.contains("kind") && j["kind"].is_string() && !path.empty()) return;
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string next = path.empty() ? it.key() : path + '.' + it.key();
      csv_walk(it.value(), next, out);
    }
  }
}

}  // namespace

json complex_to_json(Complex z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError(where + ": expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json fn_to_json(const AnalyticFn& f) {
  using Node = AnalyticFn::Node;
  return std::visit(
      [&](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Node::ConstN>) {
          return {{"kind", "const"}, {"value", complex_to_json(n.c)}};
        } else if constexpr (std::is_same_v<T, Node::IdentityN>) {
          return {{"kind", "identity"}};
        } else if constexpr (std::is_same_v<T, Node::MonomialN>) {
          return {{"kind", "monomial"}, {"n", n.n}};
        } else if constexpr (std::is_same_v<T, Node::PolynomialN>) {
          return {{"kind", "polynomial"}, {"coeffs", fns_to_json(n.coeffs)}};
        } else if constexpr (std::is_same_v<T, Node::AutomorphismN>) {
          return {{"kind", "automorphism"},
                  {"eta", complex_to_json(n.eta)},
                  {"a", complex_to_json(n.a)}};
        } else if constexpr (std::is_same_v<T, Node::BlaschkeN>) {
          return {{"kind", "blaschke"},
                  {"zeros", fns_to_json(n.zeros)},
                  {"eta", complex_to_json(n.eta)}};
        } else if constexpr (std::is_same_v<T, Node::LogTestN>) {
          return {{"kind", "logtest"}, {"theta", n.theta}};
        } else if constexpr (std::is_same_v<T, Node::SumN>) {
          return {{"kind", "sum"},
                  {"lhs", fn_to_json(n.lhs)},
                  {"rhs", fn_to_json(n.rhs)}};
        } else if constexpr (std::is_same_v<T, Node::ProductN>) {
          return {{"kind", "product"},
                  {"lhs", fn_to_json(n.lhs)},
                  {"rhs", fn_to_json(n.rhs)}};
        } else if constexpr (std::is_same_v<T, Node::ScaleN>) {
          return {{"kind", "scale"},
                  {"c", complex_to_json(n.c)},
                  {"inner", fn_to_json(n.inner)}};
        } else if constexpr (std::is_same_v<T, Node::ComposeN>) {
          return {{"kind", "compose"},
                  {"outer", fn_to_json(n.outer)},
                  {"inner", fn_to_json(n.inner)}};
        } else {
          static_assert(std::is_same_v<T, Node::ReciprocalShiftN>);
          return {{"kind", "reciprocal_shift"},
                  {"inner", fn_to_json(n.inner)},
                  {"lambda", complex_to_json(n.lambda)}};
        }
      },
      f.node().v);
}

AnalyticFn fn_from_json(const json& j, const std::string& where) {
  std::string kind = require_string(require_field(j, "kind", where),
                                    where + ".kind");
  if (kind == "const")
    return constant(
        complex_from_json(require_field(j, "value", where), where + ".value"));
  if (kind == "identity") return identity();
  if (kind == "monomial")
    return monomial(static_cast<int>(
        require_integer(require_field(j, "n", where), where + ".n")));
  if (kind == "polynomial") {
    const json& cj = require_field(j, "coeffs", where);
    if (!cj.is_array()) throw DomainError(where + ".coeffs: expected an array");
    std::vector<Complex> coeffs;
    for (std::size_t i = 0; i < cj.size(); ++i) {
      std::ostringstream p;
      p << where << ".coeffs[" << i << ']';
      coeffs.push_back(complex_from_json(cj[i], p.str()));
    }
    return polynomial(std::move(coeffs));
  }
  if (kind == "automorphism")
    return automorphism(
        complex_from_json(require_field(j, "eta", where), where + ".eta"),
        complex_from_json(require_field(j, "a", where), where + ".a"));
  if (kind == "blaschke") {
    const json& zj = require_field(j, "zeros", where);
    if (!zj.is_array()) throw DomainError(where + ".zeros: expected an array");
    std::vector<Complex> zeros;
    for (std::size_t i = 0; i < zj.size(); ++i) {
      std::ostringstream p;
      p << where << ".zeros[" << i << ']';
      zeros.push_back(complex_from_json(zj[i], p.str()));
    }
    return blaschke_product(
        std::move(zeros),
        complex_from_json(require_field(j, "eta", where), where + ".eta"));
  }
  if (kind == "logtest")
    return log_test(
        require_number(require_field(j, "theta", where), where + ".theta"));
  if (kind == "sum")
    return add(fn_from_json(require_field(j, "lhs", where), where + ".lhs"),
               fn_from_json(require_field(j, "rhs", where), where + ".rhs"));
  if (kind == "product")
    return multiply(
        fn_from_json(require_field(j, "lhs", where), where + ".lhs"),
        fn_from_json(require_field(j, "rhs", where), where + ".rhs"));
  if (kind == "scale")
    return scale(complex_from_json(require_field(j, "c", where), where + ".c"),
                 fn_from_json(require_field(j, "inner", where),
                              where + ".inner"));
  if (kind == "compose")
    return compose(
        fn_from_json(require_field(j, "outer", where), where + ".outer"),
        fn_from_json(require_field(j, "inner", where), where + ".inner"));
  if (kind == "reciprocal_shift")
    return reciprocal_shift(
        fn_from_json(require_field(j, "inner", where), where + ".inner"),
        complex_from_json(require_field(j, "lambda", where),
                          where + ".lambda"));
  throw DomainError(where + ": unknown function kind '" + kind + "'");
}

json grid_to_json(const DiskGrid& grid) {
  return {{"radii", grid.radii},
          {"angles_per_ring", grid.angles_per_ring},
          {"refinement_rounds", grid.refinement_rounds}};
}

json supremum_to_json(const SupremumEstimate& est) {
  return {{"value", est.value},
          {"witness", complex_to_json(est.witness)},
          {"stage_values", est.stage_values},
          {"converged", est.converged}};
}

json norm_bounds_to_json(const NormBounds& nb) {
  json comps = json::object();
  for (const auto& [name, value] : nb.components) comps[name] = value;
  return {{"lower", nb.lower}, {"upper", nb.upper}, {"components", comps}};
}

json isometry_to_json(const IsometryVerdict& v) {
  json ev = json::object();
  for (const auto& [name, value] : v.evidence) ev[name] = value;
  return {{"is_isometry", v.is_isometry},
          {"reason", to_string(v.reason)},
          {"evidence", ev}};
}

json spectrum_to_json(const SpectrumResult& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return {{"type", "finite_set"}, {"points", fns_to_json(v.points)}};
        } else if constexpr (std::is_same_v<T, UnitCircle>) {
          return {{"type", "unit_circle"}};
        } else if constexpr (std::is_same_v<T, ClosedUnitDisk>) {
          return {{"type", "closed_unit_disk"}, {"note", v.note}};
        } else {
          static_assert(std::is_same_v<T, RangeClosure>);
          return {{"type", "range_closure"},
                  {"samples", fns_to_json(v.samples)},
                  {"boundary_samples", fns_to_json(v.boundary_samples)}};
        }
      },
      s);
}

json membership_to_json(const MembershipReport& m) {
  json out = {{"in_spectrum", m.in_spectrum},
              {"distance", m.distance},
              {"resolvent_verified", m.resolvent_verified},
              {"identity_residual", m.identity_residual},
              {"resolvent_plausible", m.resolvent_plausible}};
  out["resolvent"] = m.resolvent ? fn_to_json(*m.resolvent) : json(nullptr);
  return out;
}

json resolvent_solve_to_json(const ResolventSolve& r) {
  return {{"f", fn_to_json(r.f)},
          {"coefficients", fns_to_json(r.coefficients)},
          {"max_residual", r.max_residual},
          {"verified", r.verified}};
}

json rotation_to_json(const RotationSpec& rot) {
  if (rot.rational())
    return {{"kind", "rotation"},
            {"order", "rational"},
            {"p", rot.p()},
            {"q", rot.q()}};
  return {{"kind", "rotation"}, {"order", "irrational"}, {"angle", rot.angle()}};
}

RotationSpec rotation_from_json(const json& j, const std::string& where) {
  std::string kind =
      require_string(require_field(j, "kind", where), where + ".kind");
  if (kind != "rotation")
    throw DomainError(where + ": expected kind 'rotation'");
  std::string order =
      require_string(require_field(j, "order", where), where + ".order");
  if (order == "rational")
    return RotationSpec::rational_turns(
        require_integer(require_field(j, "p", where), where + ".p"),
        require_integer(require_field(j, "q", where), where + ".q"));
  if (order == "irrational")
    return RotationSpec::irrational_angle(
        require_number(require_field(j, "angle", where), where + ".angle"));
  throw DomainError(where + ".order: expected 'rational' or 'irrational'");
}

ParsedOperator parse_operator(const json& j, const std::string& where) {
  std::string kind =
      require_string(require_field(j, "kind", where), where + ".kind");

  auto parse_phi = [&](ParsedOperator& op) {
    const json& pj = require_field(j, "phi", where);
    if (pj.is_object() && pj.contains("kind") && pj["kind"].is_string() &&
        pj["kind"].get<std::string>() == "rotation") {
      op.rotation = rotation_from_json(pj, where + ".phi");
      op.phi = op.rotation->as_fn();
    } else {
      op.phi = fn_from_json(pj, where + ".phi");
    }
  };

  ParsedOperator op;
  if (kind == "multiplication") {
    op.kind = OperatorKind::Multiplication;
    op.psi = fn_from_json(require_field(j, "psi", where), where + ".psi");
  } else if (kind == "composition") {
    op.kind = OperatorKind::Composition;
    parse_phi(op);
  } else if (kind == "weighted") {
    op.kind = OperatorKind::Weighted;
    op.psi = fn_from_json(require_field(j, "psi", where), where + ".psi");
    parse_phi(op);
  } else {
    throw DomainError(where + ".kind: expected 'multiplication', "
                      "'composition' or 'weighted'");
  }
  return op;
}

std::string report_to_csv(const json& report) {
  std::ostringstream out;
  out << "field,value\n";
  csv_walk(report, "", out);
  return out.str();
}

}  // namespace blochkit
