#include "doctest.h"

#include "hivecomb/errors.hpp"
#include "hivecomb/honeycomb.hpp"

#include <random>

using namespace hivecomb;

namespace {

BoundaryTriple triple(std::initializer_list<std::int64_t> l, std::initializer_list<std::int64_t> m,
                      std::initializer_list<std::int64_t> n) {
  return {make_weight(l), make_weight(m), make_weight(n)};
}

// A random valid rational hive: an affine function plus positive multiples
// of concave tents min(0, k - u) creased along lattice lines u = i, j, i + j.
Hive random_hive(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-9, 9), pos(1, 9), cut(0, n), which(0, 2);
  const Rational a(coef(rng), pos(rng)), b(coef(rng), pos(rng));
  struct Tent {
    int axis, k;
    Rational c;
  };
  std::vector<Tent> tents;
  for (int t = 0; t < 2 * n; ++t) tents.push_back({which(rng), cut(rng), Rational(pos(rng), pos(rng))});
  Hive h = Hive::zero(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      Rational v = a * i + b * j;
      for (const auto& t : tents) {
        const int u = t.axis == 0 ? i : t.axis == 1 ? j : i + j;
        if (u > t.k) v -= t.c * (u - t.k);
      }
      h(i, j) = v;
    }
  return h;
}

}  // namespace

TEST_CASE("standard configuration is nondegenerate") {
  for (int n = 1; n <= 4; ++n) {
    const Honeycomb h = standard_configuration(build_gl_tinkertoy(n));
    CHECK(h.is_nondegenerate());
    CHECK(gl_rank(h.tinkertoy()) == n);
    const auto b = boundary_conditions(h);
    CHECK(b.is_dominant());
    CHECK(weight_sum(b.lambda) + weight_sum(b.mu) + weight_sum(b.nu) == 0);
  }
}

TEST_CASE("collapsed configuration is valid and fully degenerate") {
  const Tinkertoy t = build_gl_tinkertoy(3);
  const Honeycomb h(t, std::vector<PlanePoint>(t.vertices().size()));
  for (std::size_t e = 0; e < t.edges().size(); ++e)
    if (t.edges()[e].is_two_ended()) CHECK(h.is_degenerate_edge(e));
  const auto b = boundary_conditions(h);
  CHECK(b.lambda == make_weight({0, 0, 0}));
  CHECK(b.nu == make_weight({0, 0, 0}));
  CHECK(degeneracy_graph(h).regions.size() == 1);
  CHECK(honeycomb_to_hive(h) == Hive::zero(3));
  CHECK(hive_to_honeycomb(Hive::zero(3)) == h);
}

TEST_CASE("off-axis perturbation is rejected") {
  const Tinkertoy t = build_gl_tinkertoy(2);
  std::vector<PlanePoint> pos;
  for (const auto& v : t.vertices()) pos.emplace_back(v);
  pos[1] = pos[1] + PlanePoint(Rational(1, 2), Rational(-1, 2), 0);
  CHECK_THROWS_AS(Honeycomb(t, pos), DirectionViolation);
}

TEST_CASE("hive and honeycomb roundtrip with edge lengths equal to rhombus values") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const Hive h = random_hive(n, rng);
    REQUIRE_FALSE(first_violated_rhombus(h).has_value());
    const Honeycomb hc = hive_to_honeycomb(h);
    CHECK(honeycomb_to_hive(hc) == h);
    const auto b = boundary_conditions(hc);
    CHECK(b.is_dominant());
    // Every rhombus value is the length of the edge crossing its short diagonal.
    const Tinkertoy& t = hc.tinkertoy();
    for (const Rhombus& r : rhombi(n)) {
      const LatticePoint p = hive_dual_point(n, r.obtuse[0].i, r.obtuse[0].j);
      const LatticePoint q = hive_dual_point(n, r.obtuse[1].i, r.obtuse[1].j);
      const LatticePoint a = hive_dual_point(n, r.acute[0].i, r.acute[0].j);
      const LatticePoint c = hive_dual_point(n, r.acute[1].i, r.acute[1].j);
      auto centre = [](LatticePoint u, LatticePoint v, LatticePoint w) {
        const auto s = u + v + w;
        return LatticePoint{s.x / 3, s.y / 3, s.z / 3};
      };
      const auto v1 = t.vertex_index(centre(p, q, a));
      const auto v2 = t.vertex_index(centre(p, q, c));
      REQUIRE(v1);
      REQUIRE(v2);
      bool found = false;
      for (std::size_t e : t.incident_edges(*v1)) {
        const auto& edge = t.edges()[e];
        if (edge.is_two_ended() && (*edge.head == *v2 || *edge.tail == *v2)) {
          CHECK(*hc.edge_length(e) == rhombus_value(h, r));
          found = true;
        }
      }
      CHECK(found);
    }
    // Green's theorem corollary: boundary constant coordinates sum to zero.
    Rational total = 0;
    for (std::size_t e = 0; e < t.edges().size(); ++e)
      if (!t.edges()[e].is_two_ended()) total += hc.edge_constant(e);
    CHECK(total == 0);
  }
}

TEST_CASE("boundary conditions of lattice hives") {
  const auto t = triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3});
  for (const Hive& h : enumerate_lattice_hives(t)) {
    const Honeycomb hc = hive_to_honeycomb(h);
    CHECK(hc.is_lattice());
    const auto b = boundary_conditions(hc);
    CHECK(b.lambda == t.lambda);
    CHECK(b.mu == t.mu);
    CHECK(b.nu == t.nu);
  }
}

TEST_CASE("degeneracy graph regions are convex and the hexagon case has a 6-triangle region") {
  const auto hives = enumerate_lattice_hives(triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3}));
  int six = 0;
  for (const Hive& h : hives) {
    const Honeycomb hc = hive_to_honeycomb(h);
    const auto d = degeneracy_graph(hc);
    for (std::size_t r = 0; r < d.regions.size(); ++r) {
      CHECK(d.region_is_convex(r, hc.tinkertoy()));
      six += d.regions[r].size() == 6;
    }
    CHECK(d.regions.size() == flatspace_decomposition(h).size());
  }
  CHECK(six == 1);
}
