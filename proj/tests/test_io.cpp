#include "doctest.h"

#include "generators.hpp"
#include "hivecomb/errors.hpp"
#include "hivecomb/io.hpp"
#include "hivecomb/reconstruct.hpp"
#include "hivecomb/svg.hpp"

#include <regex>

using namespace hivecomb;

namespace {

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("json round trips") {
  CHECK(rational_from_json(to_json(Rational(-7, 3))) == Rational(-7, 3));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(Json("x/2")), InvalidInput);
  CHECK_THROWS_AS(point_from_json(parse_json("[1, 1, 1]")), ZeroSumViolation);
  CHECK_THROWS_AS(parse_json("{\"n\": "), InvalidInput);

  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Hive h = testing::random_lattice_hive(rng, n, 0, 4);
      const Json j = parse_json(to_json(h).dump());
      CHECK(hive_from_json(j) == h);
      const Honeycomb c = hive_to_honeycomb(h);
      const Honeycomb back = honeycomb_from_json(parse_json(to_json(c).dump()));
      CHECK(back.positions() == c.positions());
      const Diagram d = diagram(c);
      CHECK(diagram_from_json(parse_json(to_json(d).dump())).segments() == d.segments());
    }
  const BoundaryTriple t{make_weight({2, 1, 0}), make_weight({2, 1, 0}), make_weight({-1, -2, -3})};
  const BoundaryTriple u = boundary_from_json(to_json(t));
  CHECK(u.lambda == t.lambda);
  CHECK(u.nu == t.nu);
  CHECK_THROWS_AS(boundary_from_json(parse_json(R"({"lambda":[1],"mu":[1],"nu":[1]})")), ZeroSumViolation);
  CHECK_THROWS_AS(hive_from_json(parse_json(R"({"n":2,"entries":[0,1]})")), InvalidInput);
}

TEST_CASE("malformed honeycomb positions are rejected") {
  Json j = to_json(standard_configuration(build_gl_tinkertoy(2)));
  j["positions"][0] = Json::array({5, -2, -3});
  CHECK_THROWS_AS(honeycomb_from_json(j), DirectionViolation);
  j["positions"].erase(0);
  CHECK_THROWS_AS(honeycomb_from_json(j), InvalidInput);
}

TEST_CASE("svg of the standard GL2 honeycomb") {
  const Diagram d = diagram(standard_configuration(build_gl_tinkertoy(2)));
  const std::string svg = render_svg(d);
  CHECK(count_matches(svg, "<path ") == 9);
  CHECK(count_matches(svg, "<circle ") == 4);
  CHECK(count_matches(svg, "<text ") == 0);
}

TEST_CASE("svg draws one path per canonical segment") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const Diagram a = diagram(hive_to_honeycomb(testing::random_lattice_hive(rng, n, 0, 3)));
    const Diagram b = diagram(overlay(reconstruct(a), hive_to_honeycomb(testing::random_lattice_hive(rng, n, 0, 3))));
    for (const Diagram* d : {&a, &b}) {
      const std::string svg = render_svg(*d);
      CHECK(count_matches(svg, "<path ") == d->segments().size());
      CHECK(count_matches(svg, "<circle ") == d->vertices().size());
      std::size_t heavy = 0;
      for (const auto& s : d->segments()) heavy += s.multiplicity != 1;
      CHECK(count_matches(svg, "<text ") == heavy);
    }
  }
}
