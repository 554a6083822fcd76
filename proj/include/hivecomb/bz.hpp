#pragma once

// Berenstein-Zelevinsky labelling of a GL(n) honeycomb's regions: hexagons
// carry their torsion, boundary wedges the length of one finite edge.
// Regions are addressed by hive index (the dual point of the region).

#include "hivecomb/honeycomb.hpp"

#include <map>

namespace hivecomb {

struct BZPattern {
  int n = 1;
  /// Every hive index except the three corners.
  std::map<HiveIndex, Rational> entries;

  friend bool operator==(const BZPattern&, const BZPattern&) = default;
};

/// Length of the honeycomb edge crossing the dual edge P | P + s_a, from the
/// hive H. Both points and both adjacent triangles must lie in the hive.
Rational dual_edge_length(const Hive& h, const LatticePoint& p, Axis a);

/// Left edge minus right edge of the hexagon at interior dual point p, read
/// in the frame where the a-constant edges are the two "vertical" ones.
Rational hexagon_torsion(const Hive& h, const LatticePoint& p, Axis frame);

/// Precondition: GL type (InvalidInput otherwise).
BZPattern bz_pattern(const Honeycomb& h);

}  // namespace hivecomb
