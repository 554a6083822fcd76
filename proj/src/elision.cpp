#include "hivecomb/elision.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace hivecomb {

namespace {

// Segment leaving diagram vertex v in direction k, per (v, k).
std::map<std::pair<std::size_t, int>, std::size_t> outgoing_segments(const Diagram& m) {
  std::map<std::pair<std::size_t, int>, std::size_t> out;
  for (std::size_t s = 0; s < m.segments().size(); ++s) {
    const auto& seg = m.segments()[s];
    out[{*m.vertex_at(seg.base), index(seg.direction)}] = s;
    if (!seg.length.is_infinite()) out[{*m.vertex_at(seg.end()), index(opposite(seg.direction))}] = s;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::size_t PostElisionGraph::node_of_vertex(std::size_t diagram_vertex) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), diagram_vertex);
  if (it == nodes.end() || *it != diagram_vertex) throw InvalidInput("diagram vertex is not a node");
  return static_cast<std::size_t>(it - nodes.begin());
}

bool PostElisionGraph::is_acyclic() const { return !find_cycle().has_value(); }

std::optional<std::vector<std::size_t>> PostElisionGraph::find_cycle() const {
  UnionFind uf(nodes.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e].to) continue;
    const std::size_t u = edges[e].from, v = *edges[e].to;
    if (uf.unite(u, v)) {
      tree[u].emplace_back(v, e);
      tree[v].emplace_back(u, e);
      continue;
    }
    // Path v -> u in the forest, then e closes it.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> prev(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    std::queue<std::size_t> q;
    q.push(v);
    seen[v] = true;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (const auto& [y, edge] : tree[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        prev[y] = std::make_pair(x, edge);
        q.push(y);
      }
    }
    std::vector<std::size_t> path;
    for (std::size_t x = u; x != v; x = prev[x]->first) path.push_back(prev[x]->second);
    std::reverse(path.begin(), path.end());  // v -> u
    std::vector<std::size_t> cycle{e};
    cycle.insert(cycle.end(), path.begin(), path.end());
    return cycle;
  }
  return std::nullopt;
}

PostElisionGraph elide(const Diagram& m) {
  const auto& vs = m.vertices();
  PostElisionGraph g;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const auto kind = vs[v].kind;
    if (vs[v].max_multiplicity() != 1 ||
        !(kind == VertexKind::Y || kind == VertexKind::InvertedY || kind == VertexKind::Crossing))
      throw NotSimplyDegenerate(std::string("vertex of kind ") + to_string(kind) + " at (" + to_string(vs[v].location.x()) +
                                "," + to_string(vs[v].location.y()) + "," + to_string(vs[v].location.z()) + ")");
    if (kind != VertexKind::Crossing) g.nodes.push_back(v);
  }
  const auto out = outgoing_segments(m);
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    const std::size_t va = g.nodes[a];
    for (int k = 0; k < 6; ++k) {
      if (vs[va].multiplicities[k] == 0) continue;
      ElidedEdge e;
      e.from = a;
      e.direction = direction_from_index(k);
      e.axis = constant_axis(e.direction);
      e.constant = vs[va].location.coord(e.axis);
      std::size_t at = va;
      for (;;) {
        const std::size_t s = out.at({at, k});
        e.segments.push_back(s);
        const auto& seg = m.segments()[s];
        if (seg.length.is_infinite()) break;
        const PlanePoint next = seg.base == vs[at].location ? seg.end() : seg.base;
        at = *m.vertex_at(next);
        if (vs[at].kind != VertexKind::Crossing) {
          e.to = g.node_of_vertex(at);
          break;
        }
      }
      // Finite edges are met from both ends; keep one copy.
      if (e.to && *e.to < a) continue;
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

namespace {

struct Line {
  Axis axis;
  Rational constant;
  int shift = 0;  // sign of the constant change per unit epsilon
};

PlanePoint meet(const Line& a, const Line& b, const Rational& eps) {
  if (a.axis == b.axis) throw std::logic_error("breathing: parallel lines at a vertex");
  Rational c[3];
  c[static_cast<int>(a.axis)] = a.constant + a.shift * eps;
  c[static_cast<int>(b.axis)] = b.constant + b.shift * eps;
  const int third = 3 - static_cast<int>(a.axis) - static_cast<int>(b.axis);
  c[third] = -c[static_cast<int>(a.axis)] - c[static_cast<int>(b.axis)];
  return PlanePoint(c[0], c[1], c[2]);
}

// Signed length of disp along d (disp assumed parallel).
Rational along(const PlanePoint& disp, Direction d) {
  const LatticePoint u = unit_vector(d);
  for (int c = 0; c < 3; ++c)
    if (u.coord(c) != 0) return disp.coord(static_cast<Axis>(c)) * u.coord(c);
  return 0;
}

struct BreathingFamily {
  const Honeycomb& h;
  Diagram m;
  // For every moved diagram vertex, the two lines fixing it.
  std::map<std::size_t, std::pair<Line, Line>> moved;
  std::vector<std::size_t> vertex_of;  // tinkertoy vertex -> diagram vertex

  BreathingFamily(const Honeycomb& honey, const std::vector<std::size_t>& loop) : h(honey), m(diagram(honey)) {
    const PostElisionGraph g = elide(m);
    if (loop.empty()) throw InvalidInput("empty loop");
    for (std::size_t e : loop)
      if (e >= g.edges.size() || !g.edges[e].to) throw InvalidInput("loop edges must be finite post-elision edges");
    // Walk the loop: edge i joins node seq[i] to seq[i+1].
    std::vector<std::size_t> seq;
    {
      const auto& e0 = g.edges[loop[0]];
      std::size_t start = e0.from;
      if (loop.size() > 1) {
        const auto& e1 = g.edges[loop[1]];
        if (e0.from == e1.from || e0.from == *e1.to) start = *e0.to;
      }
      seq.push_back(start);
      for (std::size_t e : loop) {
        const auto& edge = g.edges[e];
        const std::size_t cur = seq.back();
        if (edge.from == cur) seq.push_back(*edge.to);
        else if (*edge.to == cur) seq.push_back(edge.from);
        else throw InvalidInput("loop edges are not consecutive");
      }
      if (seq.back() != seq.front()) throw InvalidInput("loop does not close");
      std::vector<std::size_t> sorted(seq.begin(), seq.end() - 1);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("loop is not simple");
    }
    const std::size_t len = loop.size();
    auto loc = [&](std::size_t node) { return m.vertices()[g.nodes[node]].location; };
    // Orientation from the signed area with respect to the normal (1,1,1).
    Rational area = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const PlanePoint& p = loc(seq[i]);
      const PlanePoint& q = loc(seq[i + 1]);
      area += (p.y() * q.z() - p.z() * q.y()) + (p.z() * q.x() - p.x() * q.z()) + (p.x() * q.y() - p.y() * q.x());
    }
    std::vector<Line> lines;
    for (std::size_t i = 0; i < len; ++i) {
      const auto& edge = g.edges[loop[i]];
      const Direction d = edge.from == seq[i] ? edge.direction : opposite(edge.direction);
      const LatticePoint u = unit_vector(d);
      // l = (1,1,1) x u lies in the plane, on the interior side of a
      // positively oriented loop.
      const LatticePoint l{u.z - u.y, u.x - u.z, u.y - u.x};
      const std::int64_t outward = (area > 0 ? -1 : 1) * l.coord(static_cast<int>(edge.axis));
      lines.push_back({edge.axis, edge.constant, outward > 0 ? 1 : -1});
    }
    for (std::size_t i = 0; i < len; ++i) {
      moved.emplace(g.nodes[seq[i]], std::make_pair(lines[(i + len - 1) % len], lines[i]));
    }
    // Crossings along each loop edge slide along their other line.
    for (std::size_t i = 0; i < len; ++i) {
      const auto& edge = g.edges[loop[i]];
      for (std::size_t k = 0; k + 1 < edge.segments.size(); ++k) {
        const auto& seg = m.segments()[edge.segments[k]];
        const auto& nxt = m.segments()[edge.segments[k + 1]];
        std::optional<std::size_t> q;
        for (const PlanePoint& p : {seg.base, seg.end()})
          if (p == nxt.base || (!nxt.length.is_infinite() && p == nxt.end())) q = m.vertex_at(p);
        const auto& vx = m.vertices()[*q];
        auto it = moved.find(*q);
        if (it != moved.end()) {
          // The loop passes this crossing twice: both lines shift.
          Line& other = it->second.first.axis == edge.axis ? it->second.first : it->second.second;
          other.shift = lines[i].shift;
          continue;
        }
        Axis other_axis = edge.axis;
        for (int k2 = 0; k2 < 6; ++k2)
          if (vx.multiplicities[k2] != 0 && constant_axis(direction_from_index(k2)) != edge.axis)
            other_axis = constant_axis(direction_from_index(k2));
        moved.emplace(*q, std::make_pair(lines[i], Line{other_axis, vx.location.coord(other_axis), 0}));
      }
    }
    for (std::size_t v = 0; v < h.tinkertoy().vertices().size(); ++v) {
      const auto q = m.vertex_at(h.position(v));
      if (!q) throw NotSimplyDegenerate("a tinkertoy vertex sits in the middle of a thick edge");
      vertex_of.push_back(*q);
    }
  }

  std::vector<PlanePoint> positions(const Rational& eps) const {
    std::vector<PlanePoint> out;
    for (std::size_t v = 0; v < vertex_of.size(); ++v) {
      auto it = moved.find(vertex_of[v]);
      out.push_back(it == moved.end() ? h.position(v) : meet(it->second.first, it->second.second, eps));
    }
    return out;
  }

  std::optional<Rational> bound(int sign) const {
    const auto p0 = positions(0), p1 = positions(sign);
    std::optional<Rational> best;
    for (const auto& e : h.tinkertoy().edges()) {
      if (!e.is_two_ended()) continue;
      const Rational l0 = along(p0[*e.head] - p0[*e.tail], e.direction);
      const Rational slope = along(p1[*e.head] - p1[*e.tail], e.direction) - l0;
      if (slope >= 0) continue;
      const Rational b = l0 / -slope;
      if (!best || b < *best) best = b;
    }
    return best;
  }
};

}  // namespace

std::optional<Rational> breathing_bound(const Honeycomb& h, const std::vector<std::size_t>& loop, int sign) {
  return BreathingFamily(h, loop).bound(sign >= 0 ? 1 : -1);
}

Honeycomb breathe_loop(const Honeycomb& h, const std::vector<std::size_t>& loop, const Rational& epsilon) {
  const BreathingFamily family(h, loop);
  if (epsilon == 0) return h;
  const auto b = family.bound(epsilon > 0 ? 1 : -1);
  const Rational size = epsilon > 0 ? epsilon : Rational(-epsilon);
  if (b && size > *b) throw EpsilonTooLarge(to_string(*b), "epsilon exceeds the largest legal step " + to_string(*b));
  return Honeycomb(h.tinkertoy(), family.positions(epsilon));
}

}  // namespace hivecomb
