#include "doctest.h"

#include "generators.hpp"
#include "hivecomb/bz.hpp"

using namespace hivecomb;

TEST_CASE("BZ pattern of the collapsed honeycomb is zero") {
  const auto p = bz_pattern(hive_to_honeycomb(Hive::zero(4)));
  CHECK(p.entries.size() == 15 - 3);
  for (const auto& [k, v] : p.entries) CHECK(v == 0);
}

TEST_CASE("adjoint square has two distinct BZ patterns") {
  const BoundaryTriple t{make_weight({2, 1, 0}), make_weight({2, 1, 0}), make_weight({-1, -2, -3})};
  const auto hives = enumerate_lattice_hives(t);
  REQUIRE(hives.size() == 2);
  CHECK_FALSE(bz_pattern(hive_to_honeycomb(hives[0])) == bz_pattern(hive_to_honeycomb(hives[1])));
}

TEST_CASE("torsion is frame independent; row sums telescope") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const Hive h = testing::random_lattice_hive(rng, n, -3, 3);
    for (const auto p : h.shape().interior()) {
      const LatticePoint d = hive_dual_point(n, p.i, p.j);
      CHECK(hexagon_torsion(h, d, Axis::Z) == hexagon_torsion(h, d, Axis::X));
      CHECK(hexagon_torsion(h, d, Axis::Z) == hexagon_torsion(h, d, Axis::Y));
    }
    const BZPattern bz = bz_pattern(hive_to_honeycomb(h));
    const BoundaryTriple b = boundary_of(h);
    auto e = [&](int i, int j) { return bz.entries.at(HiveIndex{i, j}); };
    for (int j = 1; j < n; ++j) {
      // Row from the NW side to the NE side at fixed j.
      Rational tail = 0;
      for (int i = n - j; i >= 0; --i) {
        tail += e(i, j);
        if (i >= 1) CHECK(tail >= 0);
      }
      CHECK(tail == b.lambda[j - 1] - b.lambda[j]);
    }
    for (int i = 1; i < n; ++i) {
      // Row from the NE side to the bottom side at fixed i.
      Rational tail = 0;
      for (int j = 0; j <= n - i; ++j) {
        tail += e(i, j);
        if (j < n - i) CHECK(tail >= 0);
      }
      CHECK(tail == b.mu[i - 1] - b.mu[i]);
    }
    for (int k = 1; k < n; ++k) {
      // Row from the bottom side to the NW side at fixed i + j = n - k.
      const int r = n - k;
      Rational tail = 0;
      for (int i = 0; i <= r; ++i) {
        tail += e(i, r - i);
        if (i < r) CHECK(tail >= 0);
      }
      CHECK(tail == b.nu[k - 1] - b.nu[k]);
    }
  }
}
