#include "doctest.h"

#include "hivecomb/errors.hpp"
#include "hivecomb/hive.hpp"

#include <random>

using namespace hivecomb;

namespace {

BoundaryTriple triple(std::initializer_list<std::int64_t> l, std::initializer_list<std::int64_t> m,
                      std::initializer_list<std::int64_t> n) {
  return {make_weight(l), make_weight(m), make_weight(n)};
}

std::vector<std::string> boundary_strings(const Hive& h) {
  std::vector<std::string> out;
  for (auto p : h.shape().boundary_cycle()) out.push_back(to_string(h(p)));
  return out;
}

}  // namespace

TEST_CASE("rhombus counts") {
  CHECK(rhombi(1).empty());
  CHECK(rhombi(2).size() == 3);
  CHECK(rhombi(3).size() == 9);
  for (int n = 1; n <= 7; ++n) {
    CHECK(rhombi(n).size() == static_cast<std::size_t>(3 * n * (n - 1) / 2));
    CHECK(HiveShape{n}.boundary_cycle().size() == static_cast<std::size_t>(3 * n));
    CHECK(hive_triangles(n).size() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("rhombus values of affine hives vanish") {
  Hive h = Hive::zero(4);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) h(i, j) = Rational(3 * i - 2 * j + 5, 7);
  for (const auto& r : rhombi(4)) CHECK(rhombus_value(h, r) == 0);
}

TEST_CASE("boundary partial sums") {
  CHECK(boundary_strings(boundary_from_weights(triple({0, 0}, {0, 0}, {0, 0}))) ==
        std::vector<std::string>(6, "0"));
  // Differences 1,0 | 1,0 | -1,-1 climbing clockwise from the top corner.
  CHECK(boundary_strings(boundary_from_weights(triple({1, 0}, {1, 0}, {-1, -1}))) ==
        std::vector<std::string>{"0", "1", "1", "2", "2", "1"});
  CHECK(boundary_strings(boundary_from_weights(triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3}))) ==
        std::vector<std::string>{"0", "2", "3", "3", "5", "6", "6", "5", "3"});
  CHECK_THROWS_AS(boundary_from_weights(triple({1, 0}, {1, 0}, {0, 0})), ZeroSumViolation);
  const auto t = triple({3, 1, 0}, {2, 2, -1}, {0, -3, -4});
  const auto back = boundary_of(boundary_from_weights(t));
  CHECK(back.lambda == t.lambda);
  CHECK(back.mu == t.mu);
  CHECK(back.nu == t.nu);
}

TEST_CASE("GL2 counts follow the triangle inequalities on separations") {
  for (int a1 = -3; a1 <= 3; ++a1)
    for (int a2 = -3; a2 <= a1; ++a2)
      for (int b1 = -3; b1 <= 3; ++b1)
        for (int b2 = -3; b2 <= b1; ++b2)
          for (int c1 = -8; c1 <= 8; ++c1) {
            const int c2 = -(a1 + a2 + b1 + b2 + c1);
            if (c2 > c1) continue;
            const int x = a1 - a2, y = b1 - b2, z = c1 - c2;
            const bool tri = x <= y + z && y <= x + z && z <= x + y && (x + y + z) % 2 == 0;
            // Parity is automatic for integral weights with zero sum.
            CHECK(count_lattice_hives(triple({a1, a2}, {b1, b2}, {c1, c2})) == (tri ? 1u : 0u));
          }
}

TEST_CASE("adjoint square") {
  const auto t = triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3});
  CHECK(count_lattice_hives(t) == 2);
  CHECK(enumerate_lattice_hives(t).size() == 2);
  CHECK(has_lattice_hive(t));

  const auto d = decompose_tensor_product(make_weight({2, 1, 0}), make_weight({2, 1, 0}));
  std::vector<std::pair<Weight, std::uint64_t>> expected = {
      {make_weight({2, 2, 2}), 1}, {make_weight({3, 2, 1}), 2}, {make_weight({3, 3, 0}), 1},
      {make_weight({4, 1, 1}), 1}, {make_weight({4, 2, 0}), 1}};
  CHECK(d == expected);
  std::uint64_t total = 0;
  for (const auto& [s, c] : d) total += c;
  CHECK(total == 6);
}

TEST_CASE("tensor decompositions") {
  CHECK(decompose_tensor_product(make_weight({1, 0}), make_weight({1, 0})) ==
        std::vector<std::pair<Weight, std::uint64_t>>{{make_weight({1, 1}), 1}, {make_weight({2, 0}), 1}});
  CHECK(decompose_tensor_product(make_weight({4, 1, -2}), make_weight({0, 0, 0})) ==
        std::vector<std::pair<Weight, std::uint64_t>>{{make_weight({4, 1, -2}), 1}});
  CHECK_THROWS_AS(decompose_tensor_product(make_weight({0, 1}), make_weight({0, 0})), NotDominant);
}

TEST_CASE("count invariances") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3;
    std::vector<std::int64_t> l(n), m(n);
    for (auto& v : l) v = e(rng);
    for (auto& v : m) v = e(rng);
    std::sort(l.rbegin(), l.rend());
    std::sort(m.rbegin(), m.rend());
    for (const auto& [sigma, c] : decompose_tensor_product(Weight(l.begin(), l.end()), Weight(m.begin(), m.end()))) {
      BoundaryTriple t{Weight(l.begin(), l.end()), Weight(m.begin(), m.end()), {}};
      for (int a = n - 1; a >= 0; --a) t.nu.push_back(-sigma[a]);
      CHECK(count_lattice_hives(t) == c);
      CHECK(count_lattice_hives({t.mu, t.nu, t.lambda}) == c);
      BoundaryTriple twisted = t;
      for (auto& q : twisted.lambda) q += 2;
      for (auto& q : twisted.nu) q -= 2;
      CHECK(count_lattice_hives(twisted) == c);
    }
  }
}

TEST_CASE("lattice hives are concave") {
  const auto hives = enumerate_lattice_hives(triple({4, 2, 1, 0}, {3, 2, 1, 0}, {-2, -3, -4, -4}));
  CHECK(!hives.empty());
  CHECK(std::is_sorted(hives.begin(), hives.end()));
  for (const Hive& h : hives) {
    CHECK_FALSE(first_violated_rhombus(h).has_value());
    for (auto p : h.shape().interior())
      for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, -1}})
        CHECK(2 * h(p) >= h(p.i + di, p.j + dj) + h(p.i - di, p.j - dj));
  }
}

TEST_CASE("gt patterns") {
  CHECK(count_gt_patterns(make_weight({0, 0, 0})) == 1);
  CHECK(count_gt_patterns(make_weight({1, 0})) == 2);
  CHECK(count_gt_patterns(make_weight({2, 1, 0})) == 8);
  CHECK(count_gt_patterns(make_weight({3, 1, 0, 0})) == 45);
}

TEST_CASE("flatspaces") {
  CHECK(flatspace_decomposition(Hive::zero(4)).size() == 1);
  const auto hives = enumerate_lattice_hives(triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3}));
  REQUIRE(hives.size() == 2);
  int with_hexagon = 0;
  for (const Hive& h : hives) {
    for (const auto& region : flatspace_decomposition(h)) with_hexagon += region.size() == 6;
  }
  CHECK(with_hexagon == 1);
}

TEST_CASE("validate_hive names the rhombus") {
  Hive h = boundary_from_weights(triple({2, 1, 0}, {2, 1, 0}, {-1, -2, -3}));
  h(1, 1) = 100;
  CHECK_THROWS_AS(validate_hive(h), RhombusViolation);
}
