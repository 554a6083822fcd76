#include "hivecomb/lift.hpp"

#include "hive_polytope.hpp"
#include "hivecomb/errors.hpp"
#include "hivecomb/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace hivecomb {

namespace {

std::int64_t norm2(const LatticePoint& p) { return p.x * p.x + p.y * p.y + p.z * p.z; }

bool is_interior(int n, HiveIndex p) { return HiveShape{n}.contains(p.i, p.j) && !HiveShape{n}.is_boundary(p.i, p.j); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(k)};
  std::mt19937_64 g(seq);
  return g();
}

WeightFunction weight_with_scale(int n, std::uint64_t seed, const Rational& scale) {
  WeightFunction w;
  w.n = n;
  w.seed = seed;
  std::int64_t far = 0;
  for (std::size_t k = 0; k < HiveShape{n}.size(); ++k) {
    const HiveIndex p = HiveShape{n}.at(k);
    far = std::max(far, norm2(hive_dual_point(n, p.i, p.j)));
  }
  const Rational M = 1 + 6 * Rational(far);
  std::mt19937_64 rng(seed);
  const std::int64_t half = std::int64_t{1} << 19;
  for (const HiveIndex& p : HiveShape{n}.interior()) {
    const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * half)) - half;
    w.values[p] = M - norm2(hive_dual_point(n, p.i, p.j)) + scale * Rational(r, 2 * half);
  }
  return w;
}

}  // namespace

std::vector<HiveIndex> hive_neighbours(int n, HiveIndex p) {
  static constexpr int d[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}};
  std::vector<HiveIndex> out;
  for (const auto& s : d) {
    const HiveIndex q{p.i + s[0], p.j + s[1]};
    if (HiveShape{n}.contains(q.i, q.j)) out.push_back(q);
  }
  return out;
}

Rational WeightFunction::operator()(HiveIndex p) const {
  const auto it = values.find(p);
  return it == values.end() ? Rational(0) : it->second;
}

Rational WeightFunction::superharmonic_slack(HiveIndex p) const {
  Rational s = 0;
  for (const auto& q : hive_neighbours(n, p)) s += (*this)(q);
  return (*this)(p) - s / 6;
}

bool WeightFunction::is_valid() const {
  for (const auto& p : HiveShape{n}.interior()) {
    if ((*this)(p) <= 0 || superharmonic_slack(p) <= 0) return false;
  }
  return values.size() == HiveShape{n}.interior().size();
}

WeightFunction make_weight_function(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("weight function needs n >= 1");
  Rational scale = 1;
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < 64; ++attempt) {
    WeightFunction w = weight_with_scale(n, s, scale);
    if (w.is_valid()) return w;
    s = derive_seed(seed, static_cast<std::uint64_t>(attempt) + 1);
    scale /= 2;
  }
  return weight_with_scale(n, s, 0);
}

Rational ObjectiveVector::evaluate(const Hive& h) const {
  Rational v = 0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) v += coefficients[k] * h.entries()[k];
  return v;
}

ObjectiveVector wperim_objective(const WeightFunction& w) {
  ObjectiveVector o;
  o.n = w.n;
  const HiveShape shape{w.n};
  o.coefficients.resize(shape.size());
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const HiveIndex p = shape.at(k);
    Rational c = 6 * w(p);
    for (const auto& q : hive_neighbours(w.n, p)) c -= w(q);
    o.coefficients[k] = c;
  }
  return o;
}

Rational wperim(const Honeycomb& h, const WeightFunction& w) {
  const auto n = gl_rank(h.tinkertoy());
  if (!n || *n != w.n) throw InvalidInput("wperim needs a GL(n) honeycomb matching the weight function");
  const Tinkertoy& t = h.tinkertoy();
  Rational total = 0;
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    const auto& edge = t.edges()[e];
    if (!edge.is_two_ended()) continue;
    const auto a = root_triangle(t.vertices()[*edge.tail]);
    const auto b = root_triangle(t.vertices()[*edge.head]);
    const Rational len = *h.edge_length(e);
    for (const auto& p : a) {
      if (std::find(b.begin(), b.end(), p) == b.end()) continue;
      const HiveIndex q = dual_point_hive_index(*n, p);
      if (is_interior(*n, q)) total += w(q) * len;
    }
  }
  return total;
}

Hive InflationVector::apply(const Hive& h, const Rational& epsilon) const {
  std::vector<Rational> e = h.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += epsilon * direction[k];
  return Hive(h.n(), std::move(e));
}

std::optional<Rational> InflationVector::max_step(const Hive& h) const {
  const Hive dir(n, direction);
  std::optional<Rational> best;
  for (const Rhombus& r : rhombi(n)) {
    const Rational rate = rhombus_value(dir, r);
    if (rate >= 0) continue;
    const Rational s = rhombus_value(h, r) / -rate;
    if (!best || s < *best) best = s;
  }
  return best;
}

InflationVector inflation_vector(int n, HiveIndex p) { return inflation_vector(n, std::vector<HiveIndex>{p}); }

InflationVector inflation_vector(int n, const std::vector<HiveIndex>& entries) {
  InflationVector v;
  v.n = n;
  v.direction.assign(HiveShape{n}.size(), 0);
  for (const auto& p : entries) {
    if (!is_interior(n, p)) throw InvalidInput("inflation needs an interior hive entry");
    v.direction[HiveShape{n}.index(p.i, p.j)] += 1;
  }
  return v;
}

namespace {

std::int64_t cross(std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
  return a.first * b.second - a.second * b.first;
}

// Root points of a convex dual region: strictly inside, or on which sides.
struct RegionPoints {
  std::vector<LatticePoint> points;
  std::vector<bool> inside;
  /// Bit k: on closed side k.
  std::vector<unsigned> sides;
};

RegionPoints region_points(const std::array<LatticePoint, 6>& corners) {
  std::array<std::pair<std::int64_t, std::int64_t>, 6> poly;
  for (int k = 0; k < 6; ++k) poly[k] = root_coordinates(corners[k]);
  std::int64_t area2 = 0;
  for (int k = 0; k < 6; ++k) area2 += cross(poly[k], poly[(k + 1) % 6]);
  const std::int64_t sign = area2 > 0 ? 1 : -1;
  std::int64_t lo[3], hi[3];
  for (int a = 0; a < 3; ++a) {
    lo[a] = hi[a] = corners[0].coord(a);
    for (const auto& c : corners) {
      lo[a] = std::min(lo[a], c.coord(a));
      hi[a] = std::max(hi[a], c.coord(a));
    }
  }
  RegionPoints out;
  for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
    for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
      const LatticePoint p{x, y, -x - y};
      if (p.z < lo[2] || p.z > hi[2] || !is_root_point(p)) continue;
      const auto q = root_coordinates(p);
      bool in = true, strict = true;
      unsigned on = 0;
      for (int k = 0; k < 6 && in; ++k) {
        const auto& a = poly[k];
        const auto& b = poly[(k + 1) % 6];
        if (a == b) continue;
        const std::int64_t c = sign * cross({b.first - a.first, b.second - a.second}, {q.first - a.first, q.second - a.second});
        if (c < 0) in = false;
        if (c == 0) {
          strict = false;
          on |= 1u << k;
        }
      }
      if (!in) continue;
      // Corners of zero-length sides sit on both neighbours.
      for (int k = 0; k < 6; ++k)
        if (poly[k] == poly[(k + 1) % 6] && p == corners[k]) on |= 1u << k;
      out.points.push_back(p);
      out.inside.push_back(strict);
      out.sides.push_back(on);
    }
  return out;
}

bool is_corner(const std::array<LatticePoint, 6>& corners, const LatticePoint& p) {
  return std::find(corners.begin(), corners.end(), p) != corners.end();
}

}  // namespace

std::vector<LatticePoint> molt_regions(const Diagram& m, std::size_t v) {
  if (v >= m.vertices().size()) throw InvalidInput("no such diagram vertex");
  const DiagramVertex& dv = m.vertices()[v];
  if (dv.max_multiplicity() == 1 &&
      (dv.kind == VertexKind::Y || dv.kind == VertexKind::InvertedY || dv.kind == VertexKind::Crossing))
    throw NotDegenerate("a multiplicity-one " + std::string(to_string(dv.kind)) + " has nothing to molt");
  const auto corners = vertex_regions(m)[v];
  const RegionPoints rp = region_points(corners);

  std::vector<int> sides;
  for (int k = 0; k < 6; ++k)
    if (dv.multiplicities[k] != 0) sides.push_back(k);
  std::vector<std::vector<int>> variants;
  switch (dv.kind) {
    case VertexKind::Y:
    case VertexKind::InvertedY:
      for (std::size_t a = 0; a < sides.size(); ++a)
        for (std::size_t b = a + 1; b < sides.size(); ++b) variants.push_back({sides[a], sides[b]});
      break;
    case VertexKind::Crossing:
      for (int k : sides)
        if (k < 3) variants.push_back({k, k + 3});
      break;
    case VertexKind::Rake:
    case VertexKind::FiveValent:
      for (int k : sides) variants.push_back({k});
      break;
    case VertexKind::SixValent:
      variants.push_back({});
      break;
  }

  std::set<LatticePoint> region(rp.points.begin(), rp.points.end());
  for (const auto& chosen : variants) {
    std::set<LatticePoint> marked;
    for (std::size_t i = 0; i < rp.points.size(); ++i) {
      if (rp.inside[i]) {
        marked.insert(rp.points[i]);
        continue;
      }
      if (is_corner(corners, rp.points[i])) continue;
      for (int k : chosen)
        if (rp.sides[i] & (1u << k)) marked.insert(rp.points[i]);
    }
    if (marked.empty()) continue;
    // Collapsed edges of the vertex are the dual edges not along one side.
    bool legal = true;
    for (std::size_t i = 0; i < rp.points.size() && legal; ++i)
      for (int a = 0; a < 3 && legal; ++a) {
        const LatticePoint P = rp.points[i];
        const LatticePoint Q = P + root_step(static_cast<Axis>(a));
        const auto jt = std::find(rp.points.begin(), rp.points.end(), Q);
        if (jt == rp.points.end()) continue;
        if (rp.sides[i] & rp.sides[static_cast<std::size_t>(jt - rp.points.begin())]) continue;
        const LatticePoint R1 = P - root_step(static_cast<Axis>((a + 1) % 3));
        const LatticePoint R2 = P - root_step(static_cast<Axis>((a + 2) % 3));
        const int change = static_cast<int>(marked.count(P) + marked.count(Q)) -
                           static_cast<int>(marked.count(R1) + marked.count(R2));
        if (change < 0) legal = false;
      }
    if (legal) return {marked.begin(), marked.end()};
  }
  throw Error("no molting recipe applies to this vertex");
}

LpResult lp_maximize(const ObjectiveVector& objective, const BoundaryTriple& t) {
  const detail::HivePolytope P = detail::hive_polytope(t);
  if (objective.n != P.n) throw InvalidInput("objective and boundary have different ranks");
  const std::size_t d = P.vars.size();
  LpResult out;
  if (d == 0) {
    for (const auto& k : P.k)
      if (k < 0) throw Infeasible("boundary violates a rhombus inequality");
    out.hive = P.boundary;
    out.objective = objective.evaluate(out.hive);
    out.certificate.multipliers.assign(P.k.size(), 0);
    return out;
  }
  // x = y + shift with shift below every boundary value, so y > 0 at any hive.
  Rational shift = P.boundary.entries()[0];
  for (const auto& q : P.boundary.shape().boundary_cycle()) shift = std::min(shift, P.boundary(q));
  shift -= 1;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t r = 0; r < P.a.size(); ++r) {
    std::vector<Rational> row(d);
    Rational sum = 0;
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = -P.a[r][j];
      sum += P.a[r][j];
    }
    A.push_back(std::move(row));
    b.push_back(P.k[r] + shift * sum);
  }
  std::vector<Rational> c(d);
  for (std::size_t j = 0; j < d; ++j) c[j] = objective[P.vars[j]];
  const detail::SimplexOutcome s = detail::simplex_max(A, b, c);

  std::vector<Rational> x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = s.y[j] + shift;
  out.hive = P.hive_at(x);
  out.objective = objective.evaluate(out.hive);
  out.certificate.basis = s.basis;
  out.certificate.multipliers = s.duals;
  out.certificate.pivots = s.pivots;
  out.certificate.unique = true;
  if (s.dual_degenerate) {
    // Measure the optimal face coordinate by coordinate.
    std::vector<std::vector<Rational>> A2 = A;
    std::vector<Rational> b2 = b;
    std::vector<Rational> neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -c[j];
    A2.push_back(neg);
    b2.push_back(-s.value);
    for (std::size_t j = 0; j < d && out.certificate.unique; ++j) {
      std::vector<Rational> e(d, 0);
      e[j] = 1;
      const Rational hi = detail::simplex_max(A2, b2, e).value;
      e[j] = -1;
      const Rational lo = -detail::simplex_max(A2, b2, e).value;
      if (hi != lo) out.certificate.unique = false;
    }
  }
  return out;
}

bool verify_certificate(const LpResult& r, const ObjectiveVector& objective, const BoundaryTriple& t) {
  const detail::HivePolytope P = detail::hive_polytope(t);
  if (r.hive.n() != P.n || first_violated_rhombus(r.hive)) return false;
  for (const auto& q : P.boundary.shape().boundary_cycle())
    if (r.hive(q) != P.boundary(q)) return false;
  const auto rh = rhombi(P.n);
  if (r.certificate.multipliers.size() != rh.size()) return false;
  for (std::size_t k = 0; k < rh.size(); ++k) {
    const Rational& u = r.certificate.multipliers[k];
    if (u < 0) return false;
    if (u != 0 && rhombus_value(r.hive, rh[k]) != 0) return false;
  }
  for (std::size_t j = 0; j < P.vars.size(); ++j) {
    Rational g = objective[P.vars[j]];
    for (std::size_t k = 0; k < rh.size(); ++k) g += r.certificate.multipliers[k] * P.a[k][j];
    if (g != 0) return false;
  }
  return objective.evaluate(r.hive) == r.objective;
}

bool LiftReport::has_six_valent() const {
  const auto it = vertex_kinds.find(VertexKind::SixValent);
  return it != vertex_kinds.end() && it->second > 0;
}

LiftReport largest_lift(const BoundaryTriple& t, const WeightFunction& w) {
  t.validate();
  if (w.n != t.n()) throw InvalidInput("weight function and boundary have different ranks");
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const WeightFunction wk =
        attempt == 0 ? w : make_weight_function(w.n, derive_seed(w.seed, 1000 + static_cast<std::uint64_t>(attempt)));
    const ObjectiveVector obj = wperim_objective(wk);
    LpResult r = lp_maximize(obj, t);
    if (!r.certificate.unique) continue;
    LiftReport rep;
    rep.hive = r.hive;
    rep.integral = std::all_of(r.hive.entries().begin(), r.hive.entries().end(), [](const Rational& q) { return is_integer(q); });
    rep.regular = t.is_regular();
    const Diagram m = diagram(hive_to_honeycomb(r.hive));
    rep.max_multiplicity = 0;
    for (const auto& v : m.vertices()) {
      ++rep.vertex_kinds[v.kind];
      rep.max_multiplicity = std::max(rep.max_multiplicity, v.max_multiplicity());
    }
    for (const auto& s : m.segments()) rep.max_multiplicity = std::max(rep.max_multiplicity, s.multiplicity);
    try {
      rep.acyclic = elide(m).is_acyclic();
      rep.simply_degenerate = true;
    } catch (const NotSimplyDegenerate&) {
    }
    rep.objective_value = r.objective;
    rep.certificate = std::move(r.certificate);
    rep.seed = wk.seed;
    rep.reperturbations = attempt;
    return rep;
  }
  throw DegenerateOptimum("optimal face stayed positive-dimensional after re-perturbing the weights");
}

Forest forest_data(const PostElisionGraph& g) {
  Forest f;
  f.node_count = g.nodes.size();
  std::map<Direction, std::vector<std::size_t>> rays;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    f.edges.push_back({ed.from, ed.to, ed.direction, 0});
    if (!ed.to) rays[ed.direction].push_back(e);
  }
  for (auto& [dir, list] : rays) {
    std::stable_sort(list.begin(), list.end(),
                     [&](std::size_t a, std::size_t b) { return g.edges[a].constant > g.edges[b].constant; });
    for (std::size_t r = 0; r < list.size(); ++r) f.edges[list[r]].rank = r;
  }
  return f;
}

std::vector<Rational> forest_solve(const BoundaryTriple& t, const Forest& forest) {
  const std::size_t N = forest.node_count;
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::vector<std::size_t>> at(N);
  std::vector<std::optional<Rational>> value(forest.edges.size());
  for (std::size_t e = 0; e < forest.edges.size(); ++e) {
    const ForestEdge& ed = forest.edges[e];
    if (ed.from >= N || (ed.to && *ed.to >= N)) throw InvalidInput("forest edge names a missing node");
    at[ed.from].push_back(e);
    if (ed.to) {
      const std::size_t a = find(ed.from), b = find(*ed.to);
      if (a == b) throw HasCycle("finite edges of the post-elision graph contain a cycle");
      parent[a] = b;
      at[*ed.to].push_back(e);
      continue;
    }
    const Weight* side = ed.direction == Direction::NW ? &t.lambda
                         : ed.direction == Direction::NE ? &t.mu
                         : ed.direction == Direction::S  ? &t.nu
                                                         : nullptr;
    if (!side) throw InvalidInput(std::string("ray in direction ") + to_string(ed.direction) + " carries no boundary entry");
    if (ed.rank >= side->size()) throw InvalidInput("ray rank out of range");
    value[e] = (*side)[ed.rank];
  }
  std::vector<std::size_t> queue(N);
  std::iota(queue.begin(), queue.end(), 0);
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    std::optional<std::size_t> unknown;
    int missing = 0;
    Rational sum = 0;
    for (std::size_t e : at[v]) {
      if (value[e])
        sum += *value[e];
      else {
        ++missing;
        unknown = e;
      }
    }
    if (missing != 1) continue;
    value[*unknown] = -sum;
    const ForestEdge& ed = forest.edges[*unknown];
    queue.push_back(ed.from == v ? *ed.to : ed.from);
  }
  std::vector<Rational> out;
  for (const auto& v : value) {
    if (!v) throw InvalidInput("forest leaves an edge undetermined");
    out.push_back(*v);
  }
  return out;
}

}  // namespace hivecomb
