#include "doctest.h"

#include "hivecomb/plane.hpp"

#include <random>

using namespace hivecomb;

namespace {

SegmentOrRay ray(LatticePoint base, Direction d) {
  return SegmentOrRay{PlanePoint(base), d, Length::infinite(), 1};
}

}  // namespace

TEST_CASE("constant coordinate examples") {
  auto [a1, v1] = constant_coordinate(ray({0, 0, 0}, Direction::SW));
  CHECK(a1 == Axis::Y);
  CHECK(v1 == 0);
  auto [a2, v2] = constant_coordinate(ray({2, -1, -1}, Direction::SE));
  CHECK(a2 == Axis::X);
  CHECK(v2 == 2);
}

TEST_CASE("plane point rejects nonzero sum") {
  CHECK_THROWS_AS(PlanePoint(1, 0, 0), std::invalid_argument);
  CHECK_NOTHROW(PlanePoint(Rational(1, 2), Rational(-1, 3), Rational(-1, 6)));
}

TEST_CASE("directions") {
  for (Direction d : kAllDirections) {
    CHECK(opposite(opposite(d)) == d);
    CHECK(unit_vector(opposite(d)) == -1 * unit_vector(d));
    CHECK(direction_of_step(unit_vector(d)) == d);
    CHECK(parse_direction(to_string(d)) == d);
    CHECK(is_positive(d) != is_positive(opposite(d)));
    CHECK(unit_vector(d).coord(static_cast<int>(constant_axis(d))) == 0);
  }
  CHECK_THROWS(parse_direction("E"));
}

TEST_CASE("intersect examples") {
  auto none = intersect(ray({0, 0, 0}, Direction::N), ray({1, 0, -1}, Direction::N));
  CHECK(none.kind == Intersection::Kind::None);

  auto pt = intersect(ray({0, 0, 0}, Direction::SW), ray({0, 0, 0}, Direction::NW));
  REQUIRE(pt.kind == Intersection::Kind::Point);
  CHECK(*pt.point == PlanePoint(LatticePoint{0, 0, 0}));

  auto ov = intersect(ray({0, 0, 0}, Direction::SW), ray({1, 0, -1}, Direction::SW));
  REQUIRE(ov.kind == Intersection::Kind::Overlap);
  CHECK(ov.overlap->base == PlanePoint(LatticePoint{1, 0, -1}));
  CHECK(ov.overlap->length.is_infinite());
  CHECK(ov.overlap->direction == Direction::SW);

  SegmentOrRay seg{PlanePoint(LatticePoint{0, 0, 0}), Direction::N, Length::finite(2), 1};
  SegmentOrRay seg2{PlanePoint(LatticePoint{-1, 1, 0}), Direction::S, Length::finite(3), 1};
  auto ov2 = intersect(seg, seg2);
  REQUIRE(ov2.kind == Intersection::Kind::Overlap);
  CHECK(ov2.overlap->base == PlanePoint(LatticePoint{0, 0, 0}));
  CHECK(ov2.overlap->length == Length::finite(1));
}

TEST_CASE("property: constant coordinate invariant along the line; intersect symmetric") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7), dir(0, 5), len(1, 9);
  auto rnd_point = [&] {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    return PlanePoint(x, y, -x - y);
  };
  auto rnd_seg = [&] {
    SegmentOrRay s{rnd_point(), direction_from_index(dir(rng)),
                   len(rng) % 3 == 0 ? Length::infinite() : Length::finite(Rational(len(rng), den(rng))), 1};
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    SegmentOrRay s = rnd_seg();
    SegmentOrRay moved = s;
    moved.base = s.base + Rational(num(rng), den(rng)) * PlanePoint(unit_vector(s.direction));
    CHECK(constant_coordinate(s) == constant_coordinate(moved));

    SegmentOrRay t = rnd_seg();
    if (trial % 4 == 0) {  // force collinearity often enough to matter
      t.direction = trial % 8 == 0 ? s.direction : opposite(s.direction);
      t.base = s.base + Rational(num(rng), den(rng)) * PlanePoint(unit_vector(s.direction));
    }
    auto ab = intersect(s, t), ba = intersect(t, s);
    CHECK(ab.kind == ba.kind);
    CHECK(ab.point == ba.point);
    CHECK(ab.overlap == ba.overlap);
  }
}
