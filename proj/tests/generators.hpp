#pragma once

// Random inputs shared by the unit and acceptance tests.

#include "hivecomb/hive.hpp"

#include <algorithm>
#include <random>

namespace hivecomb::testing {

inline Weight random_dominant(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = e(rng);
  std::sort(v.rbegin(), v.rend());
  return Weight(v.begin(), v.end());
}

inline Weight random_strict(std::mt19937_64& rng, int n, int lo, int hi) {
  std::vector<int> pool;
  for (int x = lo; x <= hi; ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(n);
  std::sort(pool.rbegin(), pool.rend());
  return Weight(pool.begin(), pool.end());
}

// Dominant lambda, mu in [lo, hi]; nu = -reverse(sigma) for a random sigma
// in the support of the tensor product, found by rejection.
inline BoundaryTriple random_feasible_triple(std::mt19937_64& rng, int n, int lo, int hi) {
  for (;;) {
    BoundaryTriple t{random_dominant(rng, n, lo, hi), random_dominant(rng, n, lo, hi), {}};
    for (int attempt = 0; attempt < 40; ++attempt) {
      // sigma between the Cartan component and its opposite extreme.
      Weight sigma = random_dominant(rng, n, 2 * lo, 2 * hi);
      Rational diff = weight_sum(t.lambda) + weight_sum(t.mu) - weight_sum(sigma);
      // Repair the sum on the first or last entry, keeping dominance.
      if (diff > 0) sigma[0] += diff;
      else sigma[n - 1] += diff;
      if (!is_dominant(sigma)) continue;
      t.nu.clear();
      for (int a = n - 1; a >= 0; --a) t.nu.push_back(-sigma[a]);
      if (has_lattice_hive(t)) return t;
    }
  }
}

// As above with lambda, mu and nu all strictly decreasing.
inline BoundaryTriple random_regular_triple(std::mt19937_64& rng, int n, int lo, int hi) {
  for (;;) {
    BoundaryTriple t{random_strict(rng, n, lo, hi), random_strict(rng, n, lo, hi), {}};
    for (int attempt = 0; attempt < 40; ++attempt) {
      Weight sigma = random_strict(rng, n, 2 * lo, 2 * hi);
      Rational diff = weight_sum(t.lambda) + weight_sum(t.mu) - weight_sum(sigma);
      if (diff > 0) sigma[0] += diff;
      else sigma[n - 1] += diff;
      t.nu.clear();
      for (int a = n - 1; a >= 0; --a) t.nu.push_back(-sigma[a]);
      if (t.is_regular() && has_lattice_hive(t)) return t;
    }
  }
}

// A lattice hive drawn from the first `cap` lattice hives over a random
// feasible triple.
inline Hive random_lattice_hive(std::mt19937_64& rng, int n, int lo, int hi, std::size_t cap = 400) {
  const auto hives = enumerate_lattice_hives(random_feasible_triple(rng, n, lo, hi), cap);
  std::uniform_int_distribution<std::size_t> pick(0, hives.size() - 1);
  return hives[pick(rng)];
}

}  // namespace hivecomb::testing
