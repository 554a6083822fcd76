#include "hivecomb/reconstruct.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace hivecomb {

namespace {

Rational dot(const PlanePoint& p, const LatticePoint& q) { return p.x() * q.x + p.y() * q.y + p.z() * q.z; }

TinkertoyType integral_type(const LocalMultiplicities& m) {
  TinkertoyType t{};
  for (int k = 0; k < 6; ++k) t[k] = to_int64(m[k]);
  return t;
}

std::array<LatticePoint, 6> local_corners(const DiagramVertex& v) {
  // A vertex's local multiplicities close up by zero tension, but a line
  // through the vertex alone has no area; dual_polygon only checks closure.
  const TinkertoyType t = integral_type(v.multiplicities);
  if (!(t[2] - t[5] == t[4] - t[1] && t[4] - t[1] == t[0] - t[3]))
    throw NotADiagram(NotADiagramReason::Tension, "vertex multiplicities do not close up");
  std::array<LatticePoint, 6> c;
  LatticePoint at{0, 0, 0};
  for (int k = 0; k < 6; ++k) {
    c[k] = at;
    at = at + t[k] * dual_side_step(k);
  }
  return c;
}

using P2 = std::pair<std::int64_t, std::int64_t>;

P2 scaled_root(const LatticePoint& p) { return {2 * p.x + p.y, p.x + 2 * p.y}; }

bool in_polygon(const std::array<LatticePoint, 6>& corners, const LatticePoint& v) {
  std::array<P2, 6> poly;
  for (int k = 0; k < 6; ++k) poly[k] = scaled_root(corners[k]);
  std::int64_t area2 = 0;
  for (int k = 0; k < 6; ++k) {
    const P2& a = poly[k];
    const P2& b = poly[(k + 1) % 6];
    area2 += a.first * b.second - a.second * b.first;
  }
  if (area2 == 0) return false;
  const P2 q = scaled_root(v);
  for (int k = 0; k < 6; ++k) {
    const P2& a = poly[k];
    const P2& b = poly[(k + 1) % 6];
    if (a == b) continue;
    const std::int64_t c = (b.first - a.first) * (q.second - a.second) - (b.second - a.second) * (q.first - a.first);
    if ((area2 > 0 && c < 0) || (area2 < 0 && c > 0)) return false;
  }
  return true;
}

void check_diagram(const Diagram& m) {
  if (!m.has_integral_multiplicities())
    throw NotADiagram(NotADiagramReason::NonintegralMultiplicity, "reconstruction needs integral multiplicities");
  if (m.vertices().empty()) throw NotADiagram(NotADiagramReason::ParallelLines, "diagram has no vertices");
  if (!m.is_connected()) throw NotADiagram(NotADiagramReason::Disconnected, "support is not connected");
}

}  // namespace

std::vector<std::array<LatticePoint, 6>> vertex_regions(const Diagram& m) {
  check_diagram(m);
  const TinkertoyType type = m.ray_census();
  std::array<LatticePoint, 6> global;
  try {
    global = dual_polygon(type);
  } catch (const TypeDoesNotClose& e) {
    throw NotADiagram(NotADiagramReason::Tension, e.what());
  }
  const auto& vs = m.vertices();
  std::vector<std::array<LatticePoint, 6>> local;
  for (const auto& v : vs) local.push_back(local_corners(v));

  // Gluing constraints O_b = O_a + delta along finite segments, and anchors
  // O_p = fixed from the rays.
  std::vector<std::vector<std::pair<std::size_t, LatticePoint>>> adj(vs.size());
  struct Glue {
    std::size_t a, b;
    int k;
  };
  std::vector<Glue> glues;
  std::vector<std::vector<LatticePoint>> anchors(vs.size());
  std::array<std::vector<std::tuple<Rational, std::size_t, std::int64_t>>, 6> rays;
  for (const auto& s : m.segments()) {
    const auto a = m.vertex_at(s.base);
    if (!a) throw NotADiagram(NotADiagramReason::Monodromy, "segment does not start at a vertex");
    const int k = index(s.direction);
    if (s.length.is_infinite()) {
      rays[k].emplace_back(dot(s.base, dual_side_step(k)), *a, to_int64(s.multiplicity));
      continue;
    }
    const auto b = m.vertex_at(s.end());
    if (!b) throw NotADiagram(NotADiagramReason::Monodromy, "segment does not end at a vertex");
    const LatticePoint delta = local[*a][(k + 1) % 6] - local[*b][(k + 3) % 6];
    adj[*a].emplace_back(*b, delta);
    adj[*b].emplace_back(*a, -1 * delta);
    glues.push_back({*a, *b, k});
  }
  for (int k = 0; k < 6; ++k) {
    std::sort(rays[k].begin(), rays[k].end());
    std::int64_t offset = 0;
    for (const auto& [key, p, mult] : rays[k]) {
      anchors[p].push_back(global[k] + offset * dual_side_step(k) - local[p][k]);
      offset += mult;
    }
  }

  std::vector<std::optional<LatticePoint>> origin(vs.size());
  std::size_t start = 0;
  while (start < vs.size() && anchors[start].empty()) ++start;
  if (start == vs.size()) throw NotADiagram(NotADiagramReason::Monodromy, "no boundary vertex");
  origin[start] = anchors[start][0];
  std::queue<std::size_t> queue;
  queue.push(start);
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop();
    for (const auto& [b, delta] : adj[a]) {
      if (origin[b]) continue;
      origin[b] = *origin[a] + delta;
      queue.push(b);
    }
  }
  for (std::size_t p = 0; p < vs.size(); ++p) {
    if (!origin[p]) throw NotADiagram(NotADiagramReason::Disconnected, "vertex not reached");
    for (const auto& anchor : anchors[p])
      if (anchor != *origin[p]) throw NotADiagram(NotADiagramReason::Monodromy, "boundary placements disagree");
  }
  for (const auto& g : glues) {
    const LatticePoint ca = *origin[g.a] + local[g.a][g.k];
    const LatticePoint cb = *origin[g.b] + local[g.b][(g.k + 4) % 6];
    if (ca != cb) throw NotADiagram(NotADiagramReason::Monodromy, "regions do not glue along a segment");
  }
  std::vector<std::array<LatticePoint, 6>> out;
  for (std::size_t p = 0; p < vs.size(); ++p) {
    std::array<LatticePoint, 6> c;
    for (int k = 0; k < 6; ++k) c[k] = *origin[p] + local[p][k];
    out.push_back(c);
  }
  return out;
}

Honeycomb reconstruct(const Diagram& m) {
  const auto regions = vertex_regions(m);
  Tinkertoy t = [&] {
    try {
      return build_tinkertoy_from_type(m.ray_census());
    } catch (const TypeDoesNotClose& e) {
      throw NotADiagram(NotADiagramReason::Tension, e.what());
    }
  }();
  std::vector<PlanePoint> pos;
  for (const auto& v : t.vertices()) {
    std::optional<std::size_t> owner;
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (!in_polygon(regions[r], v)) continue;
      if (owner) throw NotADiagram(NotADiagramReason::Monodromy, "overlapping vertex regions");
      owner = r;
    }
    if (!owner) throw NotADiagram(NotADiagramReason::Monodromy, "tinkertoy vertex outside every region");
    pos.push_back(m.vertices()[*owner].location);
  }
  std::optional<Honeycomb> h;
  try {
    h.emplace(std::move(t), std::move(pos));
  } catch (const DirectionViolation& e) {
    throw NotADiagram(NotADiagramReason::Monodromy, e.what());
  }
  if (!(diagram(*h) == m)) throw NotADiagram(NotADiagramReason::Monodromy, "reconstruction does not reproduce the diagram");
  return *h;
}

Honeycomb overlay(const Honeycomb& a, const Honeycomb& b) {
  const Diagram da = diagram(a), db = diagram(b);
  Diagram sum;
  try {
    sum = da + db;
  } catch (const NotADiagram& e) {
    if (e.reason() == NotADiagramReason::ParallelLines) throw ParallelLinesOnly(e.what());
    throw;
  }
  if (sum.vertices().empty()) throw ParallelLinesOnly("overlay of parallel lines");
  return reconstruct(sum);
}

Honeycomb tripod(const Rational& a, const Rational& b) {
  return Honeycomb(build_gl_tinkertoy(1), {PlanePoint(a, b, -a - b)});
}

Honeycomb prv_witness(const Weight& lambda, const Weight& mu, const std::vector<int>& w, const std::vector<int>& v) {
  const std::size_t n = lambda.size();
  if (n == 0 || mu.size() != n || w.size() != n || v.size() != n) throw InvalidInput("length mismatch");
  for (const auto* perm : {&w, &v}) {
    std::vector<int> sorted = *perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != static_cast<int>(i)) throw InvalidInput("not a permutation of 0..n-1");
  }
  Weight sigma;
  for (std::size_t i = 0; i < n; ++i) sigma.push_back(lambda[w[i]] + mu[v[i]]);
  if (!is_dominant(sigma)) throw NotDominant("w.lambda + v.mu is not weakly decreasing");
  std::vector<SegmentOrRay> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const Diagram d = diagram(tripod(lambda[w[i]], mu[v[i]]));
    pieces.insert(pieces.end(), d.segments().begin(), d.segments().end());
  }
  return reconstruct(Diagram::canonicalize(pieces));
}

}  // namespace hivecomb
