#pragma once

// Configurations of honeycomb tinkertoys, and the linear chart given by
// hives. A hive is the height function on the dual graph: crossing the dual
// edge P -> P + s_a lowers the height by the constant coordinate of the
// a-constant honeycomb edge crossed.

#include "hivecomb/hive.hpp"
#include "hivecomb/plane.hpp"
#include "hivecomb/tinkertoy.hpp"

#include <optional>
#include <vector>

namespace hivecomb {

class Honeycomb {
 public:
  /// Checks every two-ended edge: pos(head) - pos(tail) must be a
  /// nonnegative multiple of d(e). Throws DirectionViolation(e) otherwise.
  Honeycomb(Tinkertoy tinkertoy, std::vector<PlanePoint> positions);

  const Tinkertoy& tinkertoy() const { return tinkertoy_; }
  const std::vector<PlanePoint>& positions() const { return positions_; }
  const PlanePoint& position(std::size_t v) const { return positions_[v]; }
  const TinkertoyType& type() const { return tinkertoy_.type(); }

  /// Two-ended edges: nonnegative length. Rays: nullopt.
  std::optional<Rational> edge_length(std::size_t e) const;
  /// Constant coordinate of the line carrying edge e.
  Rational edge_constant(std::size_t e) const;
  bool is_degenerate_edge(std::size_t e) const;
  /// A vertex is degenerate when one of its edges has length zero.
  bool is_degenerate_vertex(std::size_t v) const;
  bool is_nondegenerate() const;
  bool is_lattice() const;

  Honeycomb translated(const PlanePoint& offset) const;

  friend bool operator==(const Honeycomb&, const Honeycomb&) = default;

 private:
  Tinkertoy tinkertoy_;
  std::vector<PlanePoint> positions_;
};

/// Every vertex placed at its own lattice point: all edges have length 1.
Honeycomb standard_configuration(const Tinkertoy& t);

/// n if t is the GL(n) tinkertoy, otherwise nullopt.
std::optional<int> gl_rank(const Tinkertoy& t);

/// Heights on dual_graph(h.tinkertoy()).points, zero at points[pin].
std::vector<Rational> dual_heights(const Honeycomb& h, const DualGraph& g, std::size_t pin = 0);

/// Dual point of hive entry (i, j) for GL(n): (2n,-n,-n) + i s_z - j s_x.
LatticePoint hive_dual_point(int n, int i, int j);
/// Inverse of hive_dual_point.
HiveIndex dual_point_hive_index(int n, const LatticePoint& p);

/// Throws RhombusViolation for an invalid hive.
Honeycomb hive_to_honeycomb(const Hive& h);
/// Precondition: h is a configuration of the GL(n) tinkertoy (InvalidInput otherwise).
Hive honeycomb_to_hive(const Honeycomb& h);

/// (lambda, mu, nu): constant coordinates of the NW, NE and S rays, read
/// clockwise from the southwest. Precondition: GL type.
BoundaryTriple boundary_conditions(const Honeycomb& h);

/// The dual graph with only the edges dual to nonzero honeycomb edges, and
/// its regions: classes of tinkertoy vertices joined by zero-length edges.
struct DegeneracyGraph {
  DualGraph dual;
  /// kept[k] for dual.edges[k].
  std::vector<bool> kept;
  /// Vertex indices of the tinkertoy, sorted, per region.
  std::vector<std::vector<std::size_t>> regions;
  /// Common position of the region's vertices.
  std::vector<PlanePoint> locations;
  /// region_of[v] for each tinkertoy vertex.
  std::vector<std::size_t> region_of;

  /// Union of the region's root triangles is convex.
  bool region_is_convex(std::size_t r, const Tinkertoy& t) const;
};

DegeneracyGraph degeneracy_graph(const Honeycomb& h);

/// Convexity of a union of root triangles, one per given tinkertoy vertex.
bool is_convex_triangle_union(const std::vector<LatticePoint>& vertices);

}  // namespace hivecomb
