#include "hivecomb/io.hpp"

#include "hivecomb/errors.hpp"

namespace hivecomb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidInput("expected a rational as \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

Json to_json(const PlanePoint& p) { return Json::array({to_json(p.x()), to_json(p.y()), to_json(p.z())}); }

PlanePoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput("a point is [x, y, z]");
  const Rational x = rational_from_json(j[0]), y = rational_from_json(j[1]), z = rational_from_json(j[2]);
  if (x + y + z != 0) throw ZeroSumViolation("point coordinates must sum to zero");
  return PlanePoint(x, y, z);
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& q : w) a.push_back(to_json(q));
  return a;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& q : array(j, "a weight")) w.push_back(rational_from_json(q));
  return w;
}

Json to_json(const BoundaryTriple& t) {
  return Json{{"lambda", to_json(t.lambda)}, {"mu", to_json(t.mu)}, {"nu", to_json(t.nu)}};
}

BoundaryTriple boundary_from_json(const Json& j) {
  BoundaryTriple t{weight_from_json(field(j, "lambda")), weight_from_json(field(j, "mu")), weight_from_json(field(j, "nu"))};
  t.validate();
  return t;
}

Json to_json(const Hive& h) {
  Json e = Json::array();
  for (const auto& q : h.entries()) e.push_back(to_json(q));
  return Json{{"n", h.n()}, {"entries", e}};
}

Hive hive_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) throw InvalidInput("\"n\" must be a positive integer");
  std::vector<Rational> e;
  for (const auto& q : array(field(j, "entries"), "\"entries\"")) e.push_back(rational_from_json(q));
  try {
    return Hive(n.get<int>(), std::move(e));
  } catch (const std::invalid_argument& ex) {
    throw InvalidInput(ex.what());
  }
}

Json to_json(const Honeycomb& h) {
  Json pos = Json::array();
  for (const auto& p : h.positions()) pos.push_back(to_json(p));
  return Json{{"type", h.type()}, {"positions", pos}};
}

Honeycomb honeycomb_from_json(const Json& j) {
  const Json& type = array(field(j, "type"), "\"type\"");
  if (type.size() != 6) throw InvalidInput("\"type\" has six entries");
  TinkertoyType t{};
  for (int k = 0; k < 6; ++k) {
    if (!type[k].is_number_integer()) throw InvalidInput("\"type\" entries are integers");
    t[k] = type[k].get<std::int64_t>();
  }
  Tinkertoy toy = build_tinkertoy_from_type(t);
  const Json& pos = array(field(j, "positions"), "\"positions\"");
  if (pos.size() != toy.vertices().size())
    throw InvalidInput("expected " + std::to_string(toy.vertices().size()) + " positions");
  std::vector<PlanePoint> p;
  for (const auto& q : pos) p.push_back(point_from_json(q));
  return Honeycomb(std::move(toy), std::move(p));
}

Json to_json(const Diagram& m) {
  Json a = Json::array();
  for (const auto& s : m.segments())
    a.push_back(Json{{"base", to_json(s.base)},
                     {"direction", to_string(s.direction)},
                     {"length", s.length.is_infinite() ? Json("inf") : to_json(s.length.value())},
                     {"multiplicity", to_json(s.multiplicity)}});
  return a;
}

Diagram diagram_from_json(const Json& j) {
  std::vector<SegmentOrRay> pieces;
  for (const auto& s : array(j, "a diagram")) {
    SegmentOrRay seg;
    seg.base = point_from_json(field(s, "base"));
    const Json& dir = field(s, "direction");
    if (!dir.is_string()) throw InvalidInput("\"direction\" is a name");
    try {
      seg.direction = parse_direction(dir.get<std::string>());
      const Json& len = field(s, "length");
      seg.length = len.is_string() && len.get<std::string>() == "inf" ? Length::infinite()
                                                                      : Length::finite(rational_from_json(len));
      seg.multiplicity = s.contains("multiplicity") ? rational_from_json(s.at("multiplicity")) : Rational(1);
      seg.validate();
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
    pieces.push_back(std::move(seg));
  }
  return Diagram::canonicalize(pieces);
}

Json to_json(const LiftReport& r) {
  Json kinds = Json::object();
  for (const auto& [k, c] : r.vertex_kinds) kinds[to_string(k)] = c;
  Json mult = Json::array();
  for (const auto& u : r.certificate.multipliers) mult.push_back(to_json(u));
  return Json{{"hive", to_json(r.hive)},
              {"integral", r.integral},
              {"regular", r.regular},
              {"vertex_kinds", kinds},
              {"max_multiplicity", is_integer(r.max_multiplicity) ? Json(to_int64(r.max_multiplicity)) : to_json(r.max_multiplicity)},
              {"simply_degenerate", r.simply_degenerate},
              {"acyclic", r.acyclic},
              {"objective_value", to_json(r.objective_value)},
              {"seed", r.seed},
              {"reperturbations", r.reperturbations},
              {"certificate", Json{{"basis", r.certificate.basis}, {"multipliers", mult}, {"pivots", r.certificate.pivots}}}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace hivecomb
