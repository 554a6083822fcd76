#include "doctest.h"

#include "generators.hpp"
#include "hivecomb/errors.hpp"
#include "hivecomb/reconstruct.hpp"

#include <set>

using namespace hivecomb;

TEST_CASE("reconstruct inverts diagram on lattice honeycombs") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const Honeycomb h = hive_to_honeycomb(testing::random_lattice_hive(rng, n, -2, 3));
      const Diagram d = diagram(h);
      const Honeycomb back = reconstruct(d);
      CHECK(back == h);
      CHECK(diagram(back) == d);
    }
}

TEST_CASE("reconstruct handles collapsed and rational configurations") {
  const Tinkertoy t = build_tinkertoy_from_type({0, 3, 0, 3, 0, 3});
  const Honeycomb collapsed(t, std::vector<PlanePoint>(t.vertices().size(), PlanePoint(1, 2, -3)));
  CHECK(reconstruct(diagram(collapsed)) == collapsed);
  // Rational positions with integral multiplicities are fine.
  Hive h = Hive::zero(3);
  h(0, 1) = Rational(5, 2);
  h(0, 2) = Rational(4);
  h(0, 3) = Rational(9, 2);
  h(1, 2) = Rational(7);
  h(2, 1) = Rational(8);
  h(3, 0) = Rational(15, 2);
  h(2, 0) = Rational(6);
  h(1, 0) = Rational(7, 2);
  h(1, 1) = Rational(6);
  REQUIRE_FALSE(first_violated_rhombus(h).has_value());
  const Honeycomb hc = hive_to_honeycomb(h);
  CHECK(reconstruct(diagram(hc)) == hc);
}

TEST_CASE("single tripod and two tripods in general position") {
  const Honeycomb y = tripod(0, 0);
  CHECK(reconstruct(diagram(y)) == y);
  const Honeycomb two = overlay(tripod(0, 0), tripod(2, -1));
  CHECK(two.type() == TinkertoyType{0, 2, 0, 2, 0, 2});
  int crossings = 0;
  for (const auto& v : diagram(two).vertices()) crossings += v.kind == VertexKind::Crossing;
  CHECK(crossings == 1);
}

TEST_CASE("overlay adds diagrams") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Honeycomb a = hive_to_honeycomb(testing::random_lattice_hive(rng, 1 + trial % 3, -2, 2));
    const Honeycomb b = hive_to_honeycomb(testing::random_lattice_hive(rng, 1 + trial % 2, -2, 2));
    const Honeycomb c = overlay(a, b);
    CHECK(diagram(c) == diagram(a) + diagram(b));
    for (int k = 0; k < 6; ++k) CHECK(c.type()[k] == a.type()[k] + b.type()[k]);
  }
  // A far away collapsed tripod adds one Y.
  const Honeycomb h = hive_to_honeycomb(testing::random_lattice_hive(rng, 3, 0, 2));
  const Honeycomb far = tripod(100, 100);
  CHECK(diagram(overlay(h, far)).vertices().size() >= diagram(h).vertices().size() + 1);
}

TEST_CASE("PRV witnesses") {
  const Weight l = make_weight({2, 1, 0});
  const Honeycomb h = prv_witness(l, l, {0, 1, 2}, {2, 1, 0});
  CHECK(h.is_lattice());
  const auto b = boundary_conditions(h);
  CHECK(b.lambda == l);
  CHECK(b.mu == l);
  CHECK(b.nu == make_weight({-2, -2, -2}));
  CHECK(count_lattice_hives(b) >= 1);

  const Honeycomb cartan = prv_witness(make_weight({3, 1, 0}), make_weight({2, 1, -1}), {0, 1, 2}, {0, 1, 2});
  CHECK(boundary_conditions(cartan).nu == make_weight({1, -2, -5}));

  CHECK_THROWS_AS(prv_witness(l, l, {2, 1, 0}, {2, 1, 0}), NotDominant);
}

TEST_CASE("reconstruct rejects bad input") {
  const Diagram y = diagram(tripod(0, 0));
  std::vector<SegmentOrRay> half(y.segments());
  for (auto& s : half) s.multiplicity = Rational(1, 2);
  try {
    reconstruct(Diagram::canonicalize(half));
    FAIL("expected NotADiagram");
  } catch (const NotADiagram& e) {
    CHECK(e.reason() == NotADiagramReason::NonintegralMultiplicity);
  }
  // Tripods in general position always meet, so their sum reconstructs.
  const Diagram apart = diagram(tripod(0, 0)) + diagram(tripod(0, 0).translated(PlanePoint(5, -5, 0)));
  CHECK_NOTHROW(reconstruct(apart));
}

TEST_CASE("degeneracy regions biject with diagram vertices and are convex") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const Honeycomb h = hive_to_honeycomb(testing::random_lattice_hive(rng, 2 + trial % 4, -2, 3));
    const Diagram m = diagram(h);
    const DegeneracyGraph g = degeneracy_graph(h);
    REQUIRE(g.regions.size() == m.vertices().size());
    std::set<std::size_t> hit;
    for (std::size_t r = 0; r < g.regions.size(); ++r) {
      CHECK(g.region_is_convex(r, h.tinkertoy()));
      const auto v = m.vertex_at(g.locations[r]);
      REQUIRE(v);
      hit.insert(*v);
    }
    CHECK(hit.size() == m.vertices().size());
    const auto polys = vertex_regions(m);
    CHECK(polys.size() == g.regions.size());
  }
}
