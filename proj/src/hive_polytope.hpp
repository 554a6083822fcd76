#pragma once

// Internal: the hive polytope of a boundary as {x : a_r . x + k_r >= 0},
// x running over the interior entries in row-major order.

#include "hivecomb/hive.hpp"

#include <vector>

namespace hivecomb::detail {

struct HivePolytope {
  int n = 1;
  Hive boundary;
  std::vector<HiveIndex> vars;
  /// Per rhombus of rhombi(n).
  std::vector<std::vector<int>> a;
  std::vector<Rational> k;

  Hive hive_at(const std::vector<Rational>& x) const;
};

HivePolytope hive_polytope(const BoundaryTriple& t);

struct SimplexOutcome {
  std::vector<Rational> y;
  Rational value;
  std::vector<std::size_t> basis;
  /// Dual value per constraint row.
  std::vector<Rational> duals;
  /// Some nonbasic column has zero reduced cost.
  bool dual_degenerate = false;
  std::size_t pivots = 0;
};

/// max c.y subject to A y <= b, y >= 0. Throws Infeasible or Unbounded.
SimplexOutcome simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                           const std::vector<Rational>& c);

}  // namespace hivecomb::detail
