#include "hivecomb/tinkertoy.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace hivecomb {

namespace {

std::int64_t mod3(std::int64_t v) { return ((v % 3) + 3) % 3; }

// d(e) for the three out-edges of a tail vertex.
constexpr std::array<Direction, 3> kEdgeDirections = {Direction::N, Direction::SE, Direction::SW};

// Clockwise side steps of a dual region, side k facing rays of direction k.
const std::array<LatticePoint, 6>& side_steps() {
  static const std::array<LatticePoint, 6> steps = {
      root_step(Axis::Z),           // N rays: side runs east
      -1 * root_step(Axis::Y),      // NE
      root_step(Axis::X),           // SE
      -1 * root_step(Axis::Z),      // S
      root_step(Axis::Y),           // SW
      -1 * root_step(Axis::X),      // NW
  };
  return steps;
}

std::int64_t cross2(std::pair<std::int64_t, std::int64_t> u, std::pair<std::int64_t, std::int64_t> v) {
  return u.first * v.second - u.second * v.first;
}

}  // namespace

VertexClass vertex_class(const LatticePoint& p) {
  return mod3(2 * p.x + p.y) == 2 ? VertexClass::Tail : VertexClass::Head;
}

bool is_honeycomb_vertex(const LatticePoint& p) { return p.x + p.y + p.z == 0 && mod3(2 * p.x + p.y) != 0; }

bool is_root_point(const LatticePoint& p) { return p.x + p.y + p.z == 0 && mod3(2 * p.x + p.y) == 0; }

LatticePoint dual_side_step(int k) { return side_steps()[((k % 6) + 6) % 6]; }

LatticePoint root_step(Axis a) {
  switch (a) {
    case Axis::X: return {2, -1, -1};
    case Axis::Y: return {-1, 2, -1};
    case Axis::Z: return {-1, -1, 2};
  }
  return {};
}

std::array<LatticePoint, 3> root_triangle(const LatticePoint& v) {
  if (vertex_class(v) == VertexClass::Head)
    return {v + LatticePoint{-1, 1, 0}, v + LatticePoint{0, -1, 1}, v + LatticePoint{1, 0, -1}};
  return {v + LatticePoint{1, -1, 0}, v + LatticePoint{0, 1, -1}, v + LatticePoint{-1, 0, 1}};
}

std::pair<std::int64_t, std::int64_t> root_coordinates(const LatticePoint& p) {
  return {(2 * p.x + p.y) / 3, (p.x + 2 * p.y) / 3};
}

Tinkertoy::Tinkertoy(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_honeycomb_vertex(vertices_[i])) throw std::invalid_argument("not a honeycomb tinkertoy vertex");
    index_.emplace(vertices_[i], i);
  }
  incident_.assign(vertices_.size(), {0, 0, 0});
  std::vector<int> filled(vertices_.size(), 0);
  auto attach = [&](std::size_t v, std::size_t e) { incident_[v][filled[v]++] = e; };
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const LatticePoint& v = vertices_[i];
    for (Direction d : kEdgeDirections) {
      TinkertoyEdge e;
      e.direction = d;
      if (vertex_class(v) == VertexClass::Tail) {
        e.tail = i;
        e.head = vertex_index(v + unit_vector(d));
      } else {
        e.head = i;
        e.tail = vertex_index(v - unit_vector(d));
        if (e.tail) continue;  // added from the tail side
      }
      const std::size_t id = edges_.size();
      edges_.push_back(e);
      if (e.tail) attach(*e.tail, id);
      if (e.head) attach(*e.head, id);
      if (!e.is_two_ended()) ++type_[index(e.ray_direction())];
    }
  }
  // Edges from tails were appended before their heads were visited; heads
  // whose tail exists were skipped, so every vertex now has three edges.
}

std::optional<std::size_t> Tinkertoy::vertex_index(const LatticePoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Tinkertoy::satisfies_axioms() const {
  if (vertices_.empty()) return false;
  // Connectivity through two-ended edges.
  std::vector<bool> seen(vertices_.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t e : incident_[v]) {
      const auto& edge = edges_[e];
      if (!edge.is_two_ended()) continue;
      const std::size_t w = *edge.tail == v ? *edge.head : *edge.tail;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != vertices_.size()) return false;
  // Hexagon closure: around every root point, four present vertices force six.
  std::set<LatticePoint> centres;
  for (const auto& v : vertices_)
    for (const auto& p : root_triangle(v)) centres.insert(p);
  for (const auto& c : centres) {
    int present = 0;
    for (Direction d : kAllDirections) present += vertex_index(c + unit_vector(d)).has_value();
    if (present >= 4 && present < 6) return false;
  }
  return true;
}

Tinkertoy build_gl_tinkertoy(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<LatticePoint> vs;
  for (std::int64_t j = -3 * n; j <= 0; ++j)
    for (std::int64_t i = j; i <= j + 3 * n; ++i) {
      const std::int64_t k = -i - j;
      const LatticePoint p{i, j, k};
      if (j + 3 * n >= i && i >= k && k >= j && is_honeycomb_vertex(p)) vs.push_back(p);
    }
  return Tinkertoy(std::move(vs));
}

std::array<LatticePoint, 6> dual_polygon(const TinkertoyType& t) {
  for (auto v : t)
    if (v < 0) throw TypeDoesNotClose("type entries must be nonnegative");
  if (!(t[2] - t[5] == t[4] - t[1] && t[4] - t[1] == t[0] - t[3]))
    throw TypeDoesNotClose("side lengths do not close up");
  std::array<LatticePoint, 6> corners;
  LatticePoint c{0, 0, 0};
  for (int k = 0; k < 6; ++k) {
    corners[k] = c;
    c = c + t[k] * side_steps()[k];
  }
  return corners;
}

Tinkertoy build_tinkertoy_from_type(const TinkertoyType& t) {
  const auto corners = dual_polygon(t);
  std::vector<std::pair<std::int64_t, std::int64_t>> poly;
  for (const auto& c : corners) poly.push_back(root_coordinates(c));
  std::int64_t area2 = 0;
  for (std::size_t k = 0; k < 6; ++k) area2 += cross2(poly[k], poly[(k + 1) % 6]);
  if (area2 == 0) throw TypeDoesNotClose("type encloses no area (parallel lines only)");
  const std::int64_t sign = area2 > 0 ? 1 : -1;
  auto inside = [&](const LatticePoint& p) {
    const auto q = root_coordinates(p);
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& a = poly[k];
      const auto& b = poly[(k + 1) % 6];
      if (a == b) continue;
      const std::int64_t c = cross2({b.first - a.first, b.second - a.second}, {q.first - a.first, q.second - a.second});
      if (c * sign < 0) return false;
    }
    return true;
  };
  std::int64_t lo[3], hi[3];
  for (int a = 0; a < 3; ++a) {
    lo[a] = hi[a] = corners[0].coord(a);
    for (const auto& c : corners) {
      lo[a] = std::min(lo[a], c.coord(a));
      hi[a] = std::max(hi[a], c.coord(a));
    }
  }
  std::vector<LatticePoint> vs;
  for (std::int64_t x = lo[0] - 1; x <= hi[0] + 1; ++x)
    for (std::int64_t y = lo[1] - 1; y <= hi[1] + 1; ++y) {
      const LatticePoint p{x, y, -x - y};
      if (!is_honeycomb_vertex(p)) continue;
      const auto tri = root_triangle(p);
      if (inside(tri[0]) && inside(tri[1]) && inside(tri[2])) vs.push_back(p);
    }
  Tinkertoy out(std::move(vs));
  if (out.type() != t) throw TypeDoesNotClose("internal: built tinkertoy has a different type");
  return out;
}

std::optional<std::size_t> DualGraph::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

namespace {

using P2 = std::pair<std::int64_t, std::int64_t>;

std::vector<P2> convex_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  auto turn = [](const P2& o, const P2& a, const P2& b) {
    return cross2({a.first - o.first, a.second - o.second}, {b.first - o.first, b.second - o.second});
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Whether the side steps, taken in type order, turn clockwise when read in
// root coordinates (so that they oppose the hull orientation).
bool clockwise_in_root_coordinates() {
  static const bool cw = [] {
    std::int64_t area2 = 0;
    P2 prev = root_coordinates(side_steps()[5]);
    for (int k = 0; k < 6; ++k) {
      const P2 cur = root_coordinates(side_steps()[k]);
      area2 += cross2(prev, cur);
      prev = cur;
    }
    return area2 < 0;
  }();
  return cw;
}

}  // namespace

bool DualGraph::is_convex() const {
  std::vector<P2> pts;
  for (const auto& p : points) pts.push_back(root_coordinates(p));
  const auto h = convex_hull(pts);
  std::int64_t area2 = 0;
  for (std::size_t k = 0; k < h.size(); ++k) area2 += cross2(h[k], h[(k + 1) % h.size()]);
  return static_cast<std::size_t>(std::llabs(area2)) == triangle_count;
}

DualGraph dual_graph(const Tinkertoy& t) {
  DualGraph g;
  std::set<LatticePoint> pts;
  std::set<std::pair<LatticePoint, LatticePoint>> edges;
  for (const auto& v : t.vertices()) {
    const auto tri = root_triangle(v);
    for (int a = 0; a < 3; ++a) {
      pts.insert(tri[a]);
      const auto& p = tri[a];
      const auto& q = tri[(a + 1) % 3];
      edges.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
    }
  }
  g.triangle_count = t.vertices().size();
  g.points.assign(pts.begin(), pts.end());
  for (const auto& [p, q] : edges) g.edges.emplace_back(*g.index_of(p), *g.index_of(q));
  g.interior.resize(g.points.size());
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    bool all = true;
    for (Direction d : kAllDirections) all = all && t.vertex_index(g.points[i] + unit_vector(d)).has_value();
    g.interior[i] = all;
  }
  // Side lengths from the hull, matched against the clockwise side steps.
  std::vector<P2> pts2;
  for (const auto& p : g.points) pts2.push_back(root_coordinates(p));
  const auto hull = convex_hull(pts2);
  auto to_lattice = [](P2 ab) {
    return LatticePoint{2 * ab.first - ab.second, 2 * ab.second - ab.first, -ab.first - ab.second};
  };
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const P2 a = hull[k], b = hull[(k + 1) % hull.size()];
    P2 delta{b.first - a.first, b.second - a.second};
    const std::int64_t len = std::gcd(std::llabs(delta.first), std::llabs(delta.second));
    if (len == 0) continue;
    const LatticePoint step = to_lattice({delta.first / len, delta.second / len});
    // The hull runs counterclockwise in root coordinates; the clockwise side
    // steps may run either way there, so compare against the reference.
    const LatticePoint oriented = clockwise_in_root_coordinates() ? -1 * step : step;
    for (int s = 0; s < 6; ++s)
      if (side_steps()[s] == oriented) g.side_lengths[s] += len;
  }
  return g;
}

}  // namespace hivecomb
