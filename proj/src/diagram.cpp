#include "hivecomb/diagram.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hivecomb {

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Y: return "Y";
    case VertexKind::InvertedY: return "inverted-Y";
    case VertexKind::Crossing: return "crossing";
    case VertexKind::Rake: return "rake";
    case VertexKind::FiveValent: return "5-valent";
    case VertexKind::SixValent: return "6-valent";
  }
  return "unknown";
}

VertexKind classify_vertex(const LocalMultiplicities& m) {
  Rational sum[3] = {0, 0, 0};
  std::vector<int> used;
  for (int k = 0; k < 6; ++k) {
    if (m[k] < 0) throw TensionViolation("negative multiplicity");
    if (m[k] == 0) continue;
    used.push_back(k);
    const LatticePoint u = unit_vector(direction_from_index(k));
    for (int a = 0; a < 3; ++a) sum[a] += m[k] * u.coord(a);
  }
  if (sum[0] != 0 || sum[1] != 0 || sum[2] != 0) throw TensionViolation("weighted directions do not sum to zero");
  switch (used.size()) {
    case 3:
      // Zero tension with three rays forces them to alternate.
      return used[0] == 1 ? VertexKind::Y : VertexKind::InvertedY;
    case 4: {
      const bool two_lines = m[used[0]] == m[(used[0] + 3) % 6] && m[used[1]] == m[(used[1] + 3) % 6];
      return two_lines ? VertexKind::Crossing : VertexKind::Rake;
    }
    case 5: return VertexKind::FiveValent;
    case 6: return VertexKind::SixValent;
    default: throw UnknownPattern("fewer than three rays at a vertex");
  }
}

Rational DiagramVertex::max_multiplicity() const { return *std::max_element(multiplicities.begin(), multiplicities.end()); }

namespace {

// Piecewise-constant multiplicity along one line, parametrized by
// line_parameter. mult[k] holds on the open interval between breaks k-1 and k.
struct LineMeasure {
  Axis axis = Axis::X;
  Rational constant;
  std::vector<Rational> breaks;
  std::vector<Rational> mult;

  const Rational& right_of(const Rational& t) const {
    return mult[std::upper_bound(breaks.begin(), breaks.end(), t) - breaks.begin()];
  }
  const Rational& left_of(const Rational& t) const {
    return mult[std::lower_bound(breaks.begin(), breaks.end(), t) - breaks.begin()];
  }
  bool supports(const Rational& t) const { return right_of(t) != 0 || left_of(t) != 0; }
};

struct Piece {
  std::optional<Rational> lo, hi;
  Rational multiplicity;
};

PlanePoint point_on_line(Axis axis, const Rational& c, const Rational& t) {
  switch (axis) {
    case Axis::Z: return PlanePoint(-c - t, t, c);
    case Axis::X: return PlanePoint(c, -c - t, t);
    case Axis::Y: return PlanePoint(-c - t, c, t);
  }
  return {};
}

Piece to_piece(const SegmentOrRay& s) {
  s.validate();
  const Axis axis = constant_axis(s.direction);
  const Rational t0 = line_parameter(s.base, axis);
  Piece p;
  p.multiplicity = s.multiplicity;
  if (is_positive(s.direction)) {
    p.lo = t0;
    if (!s.length.is_infinite()) p.hi = t0 + s.length.value();
  } else {
    p.hi = t0;
    if (!s.length.is_infinite()) p.lo = t0 - s.length.value();
  }
  return p;
}

SegmentOrRay from_interval(Axis axis, const Rational& c, const std::optional<Rational>& lo,
                           const std::optional<Rational>& hi, const Rational& mult) {
  const Direction pos = positive_direction(axis);
  if (lo) {
    return SegmentOrRay{point_on_line(axis, c, *lo), pos,
                        hi ? Length::finite(*hi - *lo) : Length::infinite(), mult};
  }
  return SegmentOrRay{point_on_line(axis, c, *hi), opposite(pos), Length::infinite(), mult};
}

using LineKey = std::pair<int, Rational>;

}  // namespace

bool segment_less(const SegmentOrRay& a, const SegmentOrRay& b) {
  const auto [axa, ca] = constant_coordinate(a);
  const auto [axb, cb] = constant_coordinate(b);
  if (axa != axb) return axa < axb;
  if (ca != cb) return ca < cb;
  const Piece pa = to_piece(a), pb = to_piece(b);
  if (pa.lo.has_value() != pb.lo.has_value()) return !pa.lo.has_value();
  if (pa.lo && *pa.lo != *pb.lo) return *pa.lo < *pb.lo;
  if (pa.hi.has_value() != pb.hi.has_value()) return pa.hi.has_value();
  if (pa.hi && *pa.hi != *pb.hi) return *pa.hi < *pb.hi;
  return a.multiplicity < b.multiplicity;
}

Diagram Diagram::canonicalize(const std::vector<SegmentOrRay>& input) {
  std::map<LineKey, std::vector<Piece>> by_line;
  for (const auto& s : input) {
    const auto [axis, c] = constant_coordinate(s);
    by_line[{static_cast<int>(axis), c}].push_back(to_piece(s));
  }
  std::map<LineKey, LineMeasure> lines;
  for (const auto& [key, pieces] : by_line) {
    LineMeasure lm;
    lm.axis = static_cast<Axis>(key.first);
    lm.constant = key.second;
    std::set<Rational> br;
    for (const auto& p : pieces) {
      if (p.lo) br.insert(*p.lo);
      if (p.hi) br.insert(*p.hi);
    }
    lm.breaks.assign(br.begin(), br.end());
    const std::size_t nb = lm.breaks.size();
    for (std::size_t k = 0; k <= nb; ++k) {
      Rational sample;
      if (nb == 0) sample = 0;
      else if (k == 0) sample = lm.breaks[0] - 1;
      else if (k == nb) sample = lm.breaks[nb - 1] + 1;
      else sample = (lm.breaks[k - 1] + lm.breaks[k]) / 2;
      Rational m = 0;
      for (const auto& p : pieces)
        if ((!p.lo || *p.lo < sample) && (!p.hi || sample < *p.hi)) m += p.multiplicity;
      lm.mult.push_back(m);
    }
    lines.emplace(key, std::move(lm));
  }

  auto local = [&](const PlanePoint& p) {
    LocalMultiplicities m;
    for (int k = 0; k < 6; ++k) {
      const Direction d = direction_from_index(k);
      const Axis a = constant_axis(d);
      auto it = lines.find({static_cast<int>(a), p.coord(a)});
      if (it == lines.end()) {
        m[k] = 0;
        continue;
      }
      const Rational& t = line_parameter(p, a);
      m[k] = is_positive(d) ? it->second.right_of(t) : it->second.left_of(t);
    }
    return m;
  };

  std::set<PlanePoint> candidates;
  for (const auto& [key, lm] : lines)
    for (const auto& b : lm.breaks) candidates.insert(point_on_line(lm.axis, lm.constant, b));
  for (auto i = lines.begin(); i != lines.end(); ++i)
    for (auto j = std::next(i); j != lines.end(); ++j) {
      if (i->second.axis == j->second.axis) continue;
      Rational c[3];
      c[static_cast<int>(i->second.axis)] = i->second.constant;
      c[static_cast<int>(j->second.axis)] = j->second.constant;
      const int third = 3 - static_cast<int>(i->second.axis) - static_cast<int>(j->second.axis);
      c[third] = -i->second.constant - j->second.constant;
      const PlanePoint p(c[0], c[1], c[2]);
      if (i->second.supports(line_parameter(p, i->second.axis)) && j->second.supports(line_parameter(p, j->second.axis)))
        candidates.insert(p);
    }

  Diagram out;
  for (const auto& p : candidates) {
    const LocalMultiplicities m = local(p);
    std::vector<int> used;
    for (int k = 0; k < 6; ++k)
      if (m[k] != 0) used.push_back(k);
    if (used.empty()) continue;
    if (used.size() == 2 && used[1] == used[0] + 3 && m[used[0]] == m[used[1]]) continue;
    DiagramVertex v;
    v.location = p;
    v.multiplicities = m;
    try {
      v.kind = classify_vertex(m);
    } catch (const Error& e) {
      throw NotADiagram(NotADiagramReason::Tension, std::string("at a vertex: ") + e.what());
    }
    out.vertices_.push_back(std::move(v));
  }

  for (const auto& [key, lm] : lines) {
    std::vector<Rational> cuts;
    for (const auto& v : out.vertices_)
      if (v.location.coord(lm.axis) == lm.constant) cuts.push_back(line_parameter(v.location, lm.axis));
    std::sort(cuts.begin(), cuts.end());
    if (cuts.empty()) {
      if (lm.mult[0] != 0)
        throw NotADiagram(NotADiagramReason::ParallelLines, "a full line carries no vertex");
      continue;
    }
    if (lm.left_of(cuts.front()) != 0)
      out.segments_.push_back(from_interval(lm.axis, lm.constant, std::nullopt, cuts.front(), lm.left_of(cuts.front())));
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Rational& m = lm.right_of(cuts[k]);
      if (m != 0) out.segments_.push_back(from_interval(lm.axis, lm.constant, cuts[k], cuts[k + 1], m));
    }
    if (lm.right_of(cuts.back()) != 0)
      out.segments_.push_back(from_interval(lm.axis, lm.constant, cuts.back(), std::nullopt, lm.right_of(cuts.back())));
  }
  std::sort(out.segments_.begin(), out.segments_.end(), segment_less);
  std::sort(out.vertices_.begin(), out.vertices_.end(),
            [](const DiagramVertex& a, const DiagramVertex& b) { return a.location < b.location; });
  return out;
}

std::optional<std::size_t> Diagram::vertex_at(const PlanePoint& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p,
                             [](const DiagramVertex& v, const PlanePoint& q) { return v.location < q; });
  if (it == vertices_.end() || it->location != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

TinkertoyType Diagram::ray_census() const {
  TinkertoyType t{};
  for (const auto& s : segments_) {
    if (!s.length.is_infinite()) continue;
    if (!is_integer(s.multiplicity))
      throw NotADiagram(NotADiagramReason::NonintegralMultiplicity, "ray with nonintegral multiplicity");
    t[index(s.direction)] += to_int64(s.multiplicity);
  }
  return t;
}

bool Diagram::has_integral_multiplicities() const {
  return std::all_of(segments_.begin(), segments_.end(), [](const SegmentOrRay& s) { return is_integer(s.multiplicity); });
}

bool Diagram::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : segments_) {
    if (s.length.is_infinite()) continue;
    const auto a = vertex_at(s.base), b = vertex_at(s.end());
    if (a && b) parent[find(*a)] = find(*b);
  }
  const std::size_t root = find(0);
  for (std::size_t k = 1; k < vertices_.size(); ++k)
    if (find(k) != root) return false;
  return true;
}

Diagram operator+(const Diagram& a, const Diagram& b) {
  std::vector<SegmentOrRay> all = a.segments_;
  all.insert(all.end(), b.segments_.begin(), b.segments_.end());
  return Diagram::canonicalize(all);
}

Diagram diagram(const Honeycomb& h) {
  const Tinkertoy& t = h.tinkertoy();
  std::vector<SegmentOrRay> pieces;
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    const auto& edge = t.edges()[e];
    if (edge.is_two_ended()) {
      const Rational len = *h.edge_length(e);
      if (len == 0) continue;
      pieces.push_back({h.position(*edge.tail), edge.direction, Length::finite(len), 1});
    } else {
      pieces.push_back({h.position(edge.endpoint()), edge.ray_direction(), Length::infinite(), 1});
    }
  }
  return Diagram::canonicalize(pieces);
}

LocalMultiplicities local_multiplicities(const Diagram& m, const PlanePoint& p) {
  LocalMultiplicities out;
  for (auto& x : out) x = 0;
  for (const auto& s : m.segments()) {
    const auto [axis, c] = constant_coordinate(s);
    if (p.coord(axis) != c) continue;
    const Piece piece = to_piece(s);
    const Rational& t = line_parameter(p, axis);
    const Direction pos = positive_direction(axis);
    if ((!piece.lo || *piece.lo <= t) && (!piece.hi || t < *piece.hi)) out[index(pos)] += s.multiplicity;
    if ((!piece.lo || *piece.lo < t) && (!piece.hi || t <= *piece.hi)) out[index(opposite(pos))] += s.multiplicity;
  }
  return out;
}

}  // namespace hivecomb
