#include "doctest.h"

#include "hivecomb/errors.hpp"
#include "hivecomb/tinkertoy.hpp"

using namespace hivecomb;

TEST_CASE("GL(n) tinkertoy sizes and type") {
  for (int n = 1; n <= 6; ++n) {
    const Tinkertoy t = build_gl_tinkertoy(n);
    CHECK(t.vertices().size() == static_cast<std::size_t>(n * n));
    // 3 edges per vertex, two-ended ones counted twice.
    CHECK(t.edges().size() == static_cast<std::size_t>(3 * n * n - (3 * n * n - 3 * n) / 2));
    CHECK(t.type() == TinkertoyType{0, n, 0, n, 0, n});
    CHECK(t.satisfies_axioms());
    CHECK(build_tinkertoy_from_type(t.type()) == t);
    const DualGraph d = dual_graph(t);
    CHECK(d.points.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    CHECK(d.is_convex());
    CHECK(d.side_lengths == t.type());
  }
}

TEST_CASE("single Y") {
  const Tinkertoy t = build_gl_tinkertoy(1);
  REQUIRE(t.vertices().size() == 1);
  CHECK(t.vertices()[0] == LatticePoint{1, -1, 0});
  const DualGraph d = dual_graph(t);
  CHECK(d.points == std::vector<LatticePoint>{{0, 0, 0}, {1, -2, 1}, {2, -1, -1}});
}

TEST_CASE("types that do not close") {
  CHECK_THROWS_AS(build_tinkertoy_from_type({1, 0, 0, 0, 0, 0}), TypeDoesNotClose);
  CHECK_THROWS_AS(build_tinkertoy_from_type({1, 0, 0, 1, 0, 0}), TypeDoesNotClose);
  CHECK_THROWS_AS(build_tinkertoy_from_type({0, 0, 0, 0, 0, 0}), TypeDoesNotClose);
}

TEST_CASE("inverted Y and hexagon types") {
  const Tinkertoy inv = build_tinkertoy_from_type({1, 0, 1, 0, 1, 0});
  CHECK(inv.vertices().size() == 1);
  CHECK(inv.satisfies_axioms());
  const Tinkertoy hex = build_tinkertoy_from_type({1, 1, 1, 1, 1, 1});
  CHECK(hex.satisfies_axioms());
  CHECK(hex.type() == TinkertoyType{1, 1, 1, 1, 1, 1});
  const DualGraph d = dual_graph(hex);
  CHECK(d.is_convex());
  CHECK(std::count(d.interior.begin(), d.interior.end(), true) == 1);
}
