#include "doctest.h"

#include "generators.hpp"
#include "hivecomb/elision.hpp"
#include "hivecomb/errors.hpp"
#include "hivecomb/reconstruct.hpp"

using namespace hivecomb;

namespace {

std::size_t finite_edges(const PostElisionGraph& g) {
  std::size_t k = 0;
  for (const auto& e : g.edges) k += e.to.has_value();
  return k;
}

Rational loop_perimeter(const Honeycomb& h, const std::vector<std::size_t>& loop) {
  const Diagram m = diagram(h);
  const PostElisionGraph g = elide(m);
  Rational total = 0;
  for (std::size_t e : loop)
    for (std::size_t s : g.edges[e].segments) total += m.segments()[s].length.value();
  return total;
}

}  // namespace

TEST_CASE("elision of nondegenerate and crossing diagrams") {
  const PostElisionGraph g2 = elide(diagram(standard_configuration(build_gl_tinkertoy(2))));
  CHECK(g2.nodes.size() == 4);
  CHECK(finite_edges(g2) == 3);
  CHECK(g2.is_acyclic());

  const PostElisionGraph cross = elide(diagram(overlay(tripod(0, 0), tripod(2, -1))));
  CHECK(cross.nodes.size() == 2);
  // Both chains run through the crossing to infinity.
  CHECK(finite_edges(cross) == 0);
  CHECK(cross.is_acyclic());

  const PostElisionGraph g3 = elide(diagram(standard_configuration(build_gl_tinkertoy(3))));
  CHECK_FALSE(g3.is_acyclic());
  const auto cycle = g3.find_cycle();
  REQUIRE(cycle);
  CHECK(cycle->size() == 6);
}

TEST_CASE("elision refuses thick or high-valence vertices") {
  const Tinkertoy t = build_gl_tinkertoy(2);
  CHECK_THROWS_AS(elide(diagram(Honeycomb(t, std::vector<PlanePoint>(4)))), NotSimplyDegenerate);
}

TEST_CASE("breathing the hexagon of GL3") {
  const Honeycomb h = standard_configuration(build_gl_tinkertoy(3));
  const auto loop = *elide(diagram(h)).find_cycle();
  CHECK(breathe_loop(h, loop, 0) == h);
  const Rational before = loop_perimeter(h, loop);
  const Rational eps(1, 3);
  const Honeycomb bigger = breathe_loop(h, loop, eps);
  CHECK(loop_perimeter(bigger, loop) - before == 6 * eps);
  CHECK(boundary_conditions(bigger).lambda == boundary_conditions(h).lambda);
  CHECK(boundary_conditions(bigger).nu == boundary_conditions(h).nu);
  const Honeycomb smaller = breathe_loop(h, loop, -eps);
  CHECK(before - loop_perimeter(smaller, loop) == 6 * eps);

  // Inward, the hexagon shrinks to a point at epsilon = -1; outward the
  // spokes run out at +1.
  CHECK(*breathing_bound(h, loop, -1) == 1);
  CHECK(*breathing_bound(h, loop, 1) == 1);
  try {
    breathe_loop(h, loop, Rational(3, 2));
    FAIL("expected EpsilonTooLarge");
  } catch (const EpsilonTooLarge& e) {
    CHECK(e.bound() == "1");
  }
  const Honeycomb collapsed = breathe_loop(h, loop, -1);
  int six = 0;
  for (const auto& v : diagram(collapsed).vertices()) six += v.kind == VertexKind::SixValent;
  CHECK(six == 1);
}

TEST_CASE("breathing a loop through crossings") {
  // A tripod placed generically inside the hexagon of GL3 crosses three of
  // its edges, so the hexagon loop runs through crossings.
  const Honeycomb h3 = standard_configuration(build_gl_tinkertoy(3));
  const DualGraph d = dual_graph(h3.tinkertoy());
  LatticePoint centre;
  for (std::size_t k = 0; k < d.points.size(); ++k)
    if (d.interior[k]) centre = d.points[k];
  const PlanePoint c = PlanePoint(centre) + PlanePoint(Rational(1, 5), Rational(1, 7), Rational(-12, 35));
  const Honeycomb h = overlay(h3, tripod(c.x(), c.y()));
  const Diagram m = diagram(h);
  int crossings = 0;
  for (const auto& v : m.vertices()) crossings += v.kind == VertexKind::Crossing;
  CHECK(crossings == 3);
  const auto loop = elide(m).find_cycle();
  REQUIRE(loop);
  for (int sign : {1, -1}) {
    const auto b = breathing_bound(h, *loop, sign);
    REQUIRE(b);
    for (const Rational& eps : {Rational(sign) * *b / 2, Rational(sign) * *b}) {
      const Honeycomb moved = breathe_loop(h, *loop, eps);
      const auto bc0 = boundary_conditions(h), bc1 = boundary_conditions(moved);
      CHECK(bc0.lambda == bc1.lambda);
      CHECK(bc0.mu == bc1.mu);
      CHECK(bc0.nu == bc1.nu);
      CHECK(reconstruct(diagram(moved)) == moved);
    }
  }
}
