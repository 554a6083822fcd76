#include "doctest.h"

#include "hivecomb/diagram.hpp"
#include "hivecomb/errors.hpp"

using namespace hivecomb;

namespace {

LocalMultiplicities mults(std::initializer_list<int> m) {
  LocalMultiplicities out;
  int k = 0;
  for (int v : m) out[k++] = v;
  return out;
}

SegmentOrRay ray(const PlanePoint& base, Direction d, Rational m = 1) { return {base, d, Length::infinite(), m}; }

PlanePoint pt(std::int64_t x, std::int64_t y) { return PlanePoint(LatticePoint{x, y, -x - y}); }

}  // namespace

TEST_CASE("classify vertex") {
  CHECK(classify_vertex(mults({0, 1, 0, 1, 0, 1})) == VertexKind::Y);
  CHECK(classify_vertex(mults({2, 0, 2, 0, 2, 0})) == VertexKind::InvertedY);
  CHECK(classify_vertex(mults({1, 1, 0, 1, 1, 0})) == VertexKind::Crossing);
  CHECK(classify_vertex(mults({2, 0, 3, 2, 0, 3})) == VertexKind::Crossing);
  // m_k = m_{k+2} = m_{k+4} - m_{k+1}
  CHECK(classify_vertex(mults({1, 1, 1, 0, 2, 0})) == VertexKind::Rake);
  CHECK(classify_vertex(mults({0, 2, 1, 2, 0, 3})) == VertexKind::Rake);
  CHECK(classify_vertex(mults({1, 1, 1, 1, 1, 1})) == VertexKind::SixValent);
  CHECK(classify_vertex(mults({1, 2, 1, 1, 2, 1})) == VertexKind::SixValent);
  CHECK(classify_vertex(mults({2, 1, 1, 1, 2, 0})) == VertexKind::FiveValent);
  CHECK_THROWS_AS(classify_vertex(mults({1, 1, 1, 0, 0, 0})), TensionViolation);
  CHECK_THROWS_AS(classify_vertex(mults({1, 0, 0, 1, 0, 0})), UnknownPattern);
}

TEST_CASE("diagram of the standard GL2 configuration") {
  const Diagram d = diagram(standard_configuration(build_gl_tinkertoy(2)));
  CHECK(d.vertices().size() == 4);
  for (const auto& v : d.vertices()) {
    CHECK((v.kind == VertexKind::Y || v.kind == VertexKind::InvertedY));
    CHECK(v.max_multiplicity() == 1);
  }
  CHECK(d.segments().size() == 9);
  CHECK(d.ray_census() == TinkertoyType{0, 2, 0, 2, 0, 2});
  CHECK(d.is_connected());
}

TEST_CASE("total collapse gives one thick Y") {
  const Tinkertoy t = build_tinkertoy_from_type({0, 2, 0, 2, 0, 2});
  const Diagram d = diagram(Honeycomb(t, std::vector<PlanePoint>(t.vertices().size())));
  REQUIRE(d.vertices().size() == 1);
  CHECK(d.vertices()[0].kind == VertexKind::Y);
  CHECK(d.vertices()[0].multiplicities == mults({0, 2, 0, 2, 0, 2}));
  CHECK(d.segments().size() == 3);
}

TEST_CASE("adjoint square: exactly one honeycomb has a 6-valent vertex") {
  const BoundaryTriple t{make_weight({2, 1, 0}), make_weight({2, 1, 0}), make_weight({-1, -2, -3})};
  int six = 0;
  for (const Hive& h : enumerate_lattice_hives(t)) {
    const Diagram d = diagram(hive_to_honeycomb(h));
    int here = 0;
    for (const auto& v : d.vertices()) here += v.kind == VertexKind::SixValent;
    CHECK(here <= 1);
    six += here;
  }
  CHECK(six == 1);
}

TEST_CASE("canonical form merges and splits") {
  // Two overlapping collinear pieces add up; the line through the crossing
  // is split there.
  std::vector<SegmentOrRay> a = {ray(pt(0, 0), Direction::NE), ray(pt(0, 0), Direction::S), ray(pt(0, 0), Direction::NW)};
  std::vector<SegmentOrRay> b = {ray(pt(3, -1), Direction::NE), ray(pt(3, -1), Direction::S), ray(pt(3, -1), Direction::NW)};
  const Diagram da = Diagram::canonicalize(a), db = Diagram::canonicalize(b);
  const Diagram sum = da + db;
  CHECK(sum.ray_census() == TinkertoyType{0, 2, 0, 2, 0, 2});
  int crossings = 0, ys = 0;
  for (const auto& v : sum.vertices()) {
    crossings += v.kind == VertexKind::Crossing;
    ys += v.kind == VertexKind::Y;
  }
  CHECK(crossings == 1);
  CHECK(ys == 2);
  CHECK(sum.is_connected());
  CHECK(sum == db + da);
  // Sum with itself doubles multiplicities without adding vertices.
  const Diagram twice = da + da;
  REQUIRE(twice.vertices().size() == 1);
  CHECK(twice.vertices()[0].max_multiplicity() == 2);
  // Pieces in different order and split differently give the same canonical form.
  std::vector<SegmentOrRay> split = {ray(pt(0, 0), Direction::S), ray(pt(0, 0), Direction::NW),
                                     {pt(0, 0), Direction::NE, Length::finite(2), 1}, ray(pt(-2, 0), Direction::NE)};
  CHECK(Diagram::canonicalize(split) == da);
}

TEST_CASE("malformed diagrams") {
  CHECK_THROWS_AS(Diagram::canonicalize({ray(pt(0, 0), Direction::NE), ray(pt(0, 0), Direction::S)}), NotADiagram);
  CHECK_THROWS_AS(Diagram::canonicalize({ray(pt(0, 0), Direction::N), ray(pt(0, 0), Direction::S)}), NotADiagram);
}
