#pragma once

// JSON encodings. Rationals are "p/q" strings (integers as "p"); parsers also
// accept JSON integers. Every parser throws InvalidInput on malformed input.
//
//   hive:      {"n": 3, "entries": [...]}            row-major, top row first
//   honeycomb: {"type": [6 ints], "positions": [[x,y,z], ...]}
//              positions follow build_tinkertoy_from_type(type).vertices()
//   diagram:   [{"base": [x,y,z], "direction": "NE", "length": "2" | "inf",
//                "multiplicity": "1"}, ...]
//   boundary:  {"lambda": [...], "mu": [...], "nu": [...]}

#include "hivecomb/diagram.hpp"
#include "hivecomb/hive.hpp"
#include "hivecomb/honeycomb.hpp"
#include "hivecomb/lift.hpp"

#include "json.hpp"

namespace hivecomb {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const PlanePoint& p);
PlanePoint point_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const BoundaryTriple& t);
BoundaryTriple boundary_from_json(const Json& j);

Json to_json(const Hive& h);
Hive hive_from_json(const Json& j);

Json to_json(const Honeycomb& h);
/// DirectionViolation if the positions do not configure the tinkertoy.
Honeycomb honeycomb_from_json(const Json& j);

Json to_json(const Diagram& m);
/// Canonicalizes; NotADiagram as Diagram::canonicalize.
Diagram diagram_from_json(const Json& j);

/// {"hive", "integral", "regular", "vertex_kinds", "max_multiplicity",
///  "simply_degenerate", "acyclic", "objective_value", "seed", "certificate"}.
Json to_json(const LiftReport& r);

/// Parses text; InvalidInput with the parser's message on failure.
Json parse_json(const std::string& text);

}  // namespace hivecomb
