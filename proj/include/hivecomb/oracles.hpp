#pragma once

// Independent ground truth for cross-checks. Nothing here calls into the
// hive, honeycomb or lift code; only the value types are shared.

#include "hivecomb/hive.hpp"
#include "hivecomb/rational.hpp"

#include <cstdint>
#include <vector>

namespace hivecomb::oracles {

/// Weakly decreasing, nonnegative. Trailing zeros are ignored.
using Partition = std::vector<std::int64_t>;

/// Throws InvalidInput unless p is a partition; strips trailing zeros.
Partition normalized(Partition p);

/// c^{nu}_{lambda mu}: LR skew tableaux of shape nu/lambda and content mu
/// whose reverse reading word is a lattice word. Throws SizeMismatch when
/// |nu| != |lambda| + |mu|.
std::uint64_t lr_coefficient_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu);

/// dim (V_lambda (x) V_mu (x) V_nu)^GL(n) through the tableaux rule: nu is
/// reversed and negated, then all three are shifted by determinant powers
/// to become partitions. Requires integral dominant weights with zero sum.
std::uint64_t lr_coefficient_for_triple(const BoundaryTriple& t);

/// prod_{i<j} (l_i - l_j + j - i) / (j - i).
Integer weyl_dim(const Weight& lambda);

/// Every basic feasible solution of the hive polytope, by trying each
/// square subsystem of tight rhombus inequalities. Throws TooLarge for
/// n > 4 unless allow_large.
std::vector<Hive> enumerate_polytope_vertices(const BoundaryTriple& t, bool allow_large = false);

}  // namespace hivecomb::oracles
