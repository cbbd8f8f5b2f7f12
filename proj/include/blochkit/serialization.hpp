#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "blochkit/operators.hpp"
#include "blochkit/spectra.hpp"

// JSON wire formats. Complex numbers are always [re, im] arrays. Functions
// are tagged unions on "kind"; schema violations throw DomainError with a
// path-annotated message.
namespace blochkit {

using json = nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j, const std::string& where);

json fn_to_json(const AnalyticFn& f);
AnalyticFn fn_from_json(const json& j, const std::string& where = "function");

json grid_to_json(const DiskGrid& grid);

json supremum_to_json(const SupremumEstimate& est);
json norm_bounds_to_json(const NormBounds& nb);
json isometry_to_json(const IsometryVerdict& v);
json spectrum_to_json(const SpectrumResult& s);
json membership_to_json(const MembershipReport& m);
json resolvent_solve_to_json(const ResolventSolve& r);

json rotation_to_json(const RotationSpec& rot);
RotationSpec rotation_from_json(const json& j, const std::string& where);

// Operator input: {"kind": "multiplication"|"composition"|"weighted",
// "psi": fn?, "phi": fn-or-rotation?}. The phi slot accepts the rotation
// form {"kind":"rotation", ...}; it is surfaced separately so spectral
// commands can honor the declared order.
struct ParsedOperator {
  OperatorKind kind = OperatorKind::Multiplication;
  std::optional<AnalyticFn> psi;
  std::optional<AnalyticFn> phi;          // analytic phi (rotation expanded)
  std::optional<RotationSpec> rotation;   // set when phi was a rotation spec
};
ParsedOperator parse_operator(const json& j, const std::string& where = "operator");

// Flatten scalar leaves of a report into "dotted.path,value" CSV lines
// (arrays of scalars are indexed; clouds and nested function trees are
// JSON-only and skipped).
std::string report_to_csv(const json& report);

}  // namespace blochkit
