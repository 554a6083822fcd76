#include "hivecomb/honeycomb.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace hivecomb {

namespace {

// Signed length L with disp = L * unit_vector(d), if disp is parallel to d.
std::optional<Rational> displacement_along(const PlanePoint& disp, Direction d) {
  const LatticePoint u = unit_vector(d);
  for (int c = 0; c < 3; ++c) {
    if (u.coord(c) == 0) continue;
    const Rational len = disp.coord(static_cast<Axis>(c)) * u.coord(c);
    for (int k = 0; k < 3; ++k)
      if (disp.coord(static_cast<Axis>(k)) != len * u.coord(k)) return std::nullopt;
    return len;
  }
  return std::nullopt;
}

// The tinkertoy vertex whose root triangle is {p, q, r}.
LatticePoint triangle_vertex(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
  const LatticePoint s = p + q + r;
  return {s.x / 3, s.y / 3, s.z / 3};
}

// Axis a and sign with q - p = sign * s_a.
std::optional<std::pair<Axis, int>> root_step_between(const LatticePoint& p, const LatticePoint& q) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    if (q - p == root_step(a)) return std::make_pair(a, 1);
    if (p - q == root_step(a)) return std::make_pair(a, -1);
  }
  return std::nullopt;
}

}  // namespace

Honeycomb::Honeycomb(Tinkertoy tinkertoy, std::vector<PlanePoint> positions)
    : tinkertoy_(std::move(tinkertoy)), positions_(std::move(positions)) {
  if (positions_.size() != tinkertoy_.vertices().size())
    throw InvalidInput("position count does not match the tinkertoy");
  const auto& edges = tinkertoy_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].is_two_ended()) continue;
    const auto len = displacement_along(positions_[*edges[e].head] - positions_[*edges[e].tail], edges[e].direction);
    if (!len) throw DirectionViolation(e, "edge " + std::to_string(e) + " is not parallel to its direction");
    if (*len < 0) throw DirectionViolation(e, "edge " + std::to_string(e) + " has negative length");
  }
}

std::optional<Rational> Honeycomb::edge_length(std::size_t e) const {
  const auto& edge = tinkertoy_.edges()[e];
  if (!edge.is_two_ended()) return std::nullopt;
  return displacement_along(positions_[*edge.head] - positions_[*edge.tail], edge.direction);
}

Rational Honeycomb::edge_constant(std::size_t e) const {
  const auto& edge = tinkertoy_.edges()[e];
  return positions_[edge.endpoint()].coord(constant_axis(edge.direction));
}

bool Honeycomb::is_degenerate_edge(std::size_t e) const {
  const auto len = edge_length(e);
  return len && *len == 0;
}

bool Honeycomb::is_degenerate_vertex(std::size_t v) const {
  for (std::size_t e : tinkertoy_.incident_edges(v))
    if (is_degenerate_edge(e)) return true;
  return false;
}

bool Honeycomb::is_nondegenerate() const {
  for (std::size_t e = 0; e < tinkertoy_.edges().size(); ++e)
    if (is_degenerate_edge(e)) return false;
  return true;
}

bool Honeycomb::is_lattice() const {
  return std::all_of(positions_.begin(), positions_.end(), [](const PlanePoint& p) { return p.is_lattice(); });
}

Honeycomb Honeycomb::translated(const PlanePoint& offset) const {
  std::vector<PlanePoint> moved;
  for (const auto& p : positions_) moved.push_back(p + offset);
  return Honeycomb(tinkertoy_, std::move(moved));
}

Honeycomb standard_configuration(const Tinkertoy& t) {
  std::vector<PlanePoint> pos;
  for (const auto& v : t.vertices()) pos.emplace_back(v);
  return Honeycomb(t, std::move(pos));
}

std::optional<int> gl_rank(const Tinkertoy& t) {
  const auto& ty = t.type();
  const std::int64_t n = ty[1];
  if (n < 1 || ty != TinkertoyType{0, n, 0, n, 0, n}) return std::nullopt;
  if (!(t == build_gl_tinkertoy(static_cast<int>(n)))) return std::nullopt;
  return static_cast<int>(n);
}

std::vector<Rational> dual_heights(const Honeycomb& h, const DualGraph& g, std::size_t pin) {
  const Tinkertoy& t = h.tinkertoy();
  // Each triangle side P -> Q = P + sign s_a gives H(Q) = H(P) - sign c_a(v).
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(g.points.size());
  for (std::size_t v = 0; v < t.vertices().size(); ++v) {
    const auto tri = root_triangle(t.vertices()[v]);
    for (int s = 0; s < 3; ++s) {
      const auto& p = tri[s];
      const auto& q = tri[(s + 1) % 3];
      const auto step = root_step_between(p, q);
      const Rational c = h.position(v).coord(step->first);
      const std::size_t ip = *g.index_of(p), iq = *g.index_of(q);
      adj[ip].emplace_back(iq, -step->second * c);
      adj[iq].emplace_back(ip, step->second * c);
    }
  }
  std::vector<std::optional<Rational>> height(g.points.size());
  height[pin] = Rational(0);
  std::queue<std::size_t> queue;
  queue.push(pin);
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop();
    for (const auto& [q, delta] : adj[p]) {
      if (height[q]) continue;
      height[q] = *height[p] + delta;
      queue.push(q);
    }
  }
  std::vector<Rational> out;
  for (auto& x : height) out.push_back(*x);
  return out;
}

LatticePoint hive_dual_point(int n, int i, int j) {
  return LatticePoint{2 * n, -n, -n} + static_cast<std::int64_t>(i) * root_step(Axis::Z) -
         static_cast<std::int64_t>(j) * root_step(Axis::X);
}

HiveIndex dual_point_hive_index(int n, const LatticePoint& p) {
  const std::int64_t i = (p.z - p.y) / 3;
  return {static_cast<int>(i), static_cast<int>(p.y + n + i)};
}

Honeycomb hive_to_honeycomb(const Hive& h) {
  validate_hive(h);
  const int n = h.n();
  Tinkertoy t = build_gl_tinkertoy(n);
  auto height = [&](const LatticePoint& p) { return h(dual_point_hive_index(n, p)); };
  std::vector<PlanePoint> pos;
  for (const auto& v : t.vertices()) {
    const auto tri = root_triangle(v);
    Rational c[3];
    for (int s = 0; s < 3; ++s) {
      const auto& p = tri[s];
      const auto& q = tri[(s + 1) % 3];
      const auto step = root_step_between(p, q);
      // H(P + s_a) = H(P) - c_a.
      c[static_cast<int>(step->first)] = step->second > 0 ? height(p) - height(q) : height(q) - height(p);
    }
    pos.emplace_back(c[0], c[1], c[2]);
  }
  return Honeycomb(std::move(t), std::move(pos));
}

Hive honeycomb_to_hive(const Honeycomb& h) {
  const auto n = gl_rank(h.tinkertoy());
  if (!n) throw InvalidInput("honeycomb is not a configuration of a GL(n) tinkertoy");
  const DualGraph g = dual_graph(h.tinkertoy());
  const auto heights = dual_heights(h, g, *g.index_of(hive_dual_point(*n, 0, 0)));
  Hive out = Hive::zero(*n);
  for (std::size_t k = 0; k < g.points.size(); ++k) {
    const HiveIndex p = dual_point_hive_index(*n, g.points[k]);
    out(p.i, p.j) = heights[k];
  }
  return out;
}

BoundaryTriple boundary_conditions(const Honeycomb& h) { return boundary_of(honeycomb_to_hive(h)); }

bool is_convex_triangle_union(const std::vector<LatticePoint>& vertices) {
  DualGraph g;
  std::set<LatticePoint> pts;
  for (const auto& v : vertices)
    for (const auto& p : root_triangle(v)) pts.insert(p);
  g.points.assign(pts.begin(), pts.end());
  g.triangle_count = vertices.size();
  return g.is_convex();
}

bool DegeneracyGraph::region_is_convex(std::size_t r, const Tinkertoy& t) const {
  std::vector<LatticePoint> vs;
  for (std::size_t v : regions[r]) vs.push_back(t.vertices()[v]);
  return is_convex_triangle_union(vs);
}

DegeneracyGraph degeneracy_graph(const Honeycomb& h) {
  const Tinkertoy& t = h.tinkertoy();
  DegeneracyGraph out;
  out.dual = dual_graph(t);
  const std::size_t nv = t.vertices().size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    if (!h.is_degenerate_edge(e)) continue;
    const auto& edge = t.edges()[e];
    parent[find(*edge.tail)] = find(*edge.head);
  }
  // A dual edge P|Q is dropped when the honeycomb edge crossing it has
  // length zero: both adjacent triangles exist and lie in one region.
  for (const auto& [ip, iq] : out.dual.edges) {
    const LatticePoint& p = out.dual.points[ip];
    const LatticePoint& q = out.dual.points[iq];
    std::vector<std::size_t> sides;
    for (Direction d : kAllDirections) {
      const LatticePoint r = p + unit_vector(d);
      // r ranges over the six vertices around p; keep those adjacent to q too.
      const auto tri = root_triangle(r);
      if (std::find(tri.begin(), tri.end(), q) == tri.end()) continue;
      if (auto v = t.vertex_index(r)) sides.push_back(*v);
    }
    bool keep = true;
    if (sides.size() == 2) {
      for (std::size_t e : t.incident_edges(sides[0])) {
        const auto& edge = t.edges()[e];
        if (edge.is_two_ended() && (*edge.tail == sides[1] || *edge.head == sides[1])) keep = !h.is_degenerate_edge(e);
      }
    }
    out.kept.push_back(keep);
  }
  std::map<std::size_t, std::size_t> root_to_region;
  out.region_of.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t root = find(v);
    auto [it, inserted] = root_to_region.emplace(root, out.regions.size());
    if (inserted) {
      out.regions.emplace_back();
      out.locations.push_back(h.position(v));
    }
    out.regions[it->second].push_back(v);
    out.region_of[v] = it->second;
  }
  return out;
}

}  // namespace hivecomb
