#pragma once

// Honeycomb tinkertoys: finite subgraphs of the infinite honeycomb graph on
// the lattice points {3 does not divide 2i+j}, plus their dual graphs.

#include "hivecomb/plane.hpp"

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

namespace hivecomb {

/// Counts of semi-infinite edges in each direction, clockwise from North.
using TinkertoyType = std::array<std::int64_t, 6>;

/// Vertices with 2i+j = 2 (mod 3) are edge tails, 2i+j = 1 (mod 3) are heads.
enum class VertexClass { Tail, Head };

/// Precondition: p is a vertex of the infinite honeycomb tinkertoy.
VertexClass vertex_class(const LatticePoint& p);
bool is_honeycomb_vertex(const LatticePoint& p);
bool is_root_point(const LatticePoint& p);

/// Root lattice steps s_a = 3 e_a - (1,1,1); crossing one of them crosses an
/// a-constant honeycomb edge.
LatticePoint root_step(Axis a);

/// The three root lattice points nearest to a honeycomb vertex.
std::array<LatticePoint, 3> root_triangle(const LatticePoint& v);

struct TinkertoyEdge {
  std::optional<std::size_t> tail;
  std::optional<std::size_t> head;
  /// d(e), pointing from tail to head: one of N, SE, SW.
  Direction direction = Direction::N;

  bool is_two_ended() const { return tail && head; }
  /// Direction in which a one-ended edge leaves its vertex.
  Direction ray_direction() const { return head ? opposite(direction) : direction; }
  std::size_t endpoint() const { return head ? *head : *tail; }
};

class Tinkertoy {
 public:
  /// Builds the subtinkertoy on the given vertices (all three edges at each).
  /// Throws std::invalid_argument if a point is not a honeycomb vertex.
  explicit Tinkertoy(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<TinkertoyEdge>& edges() const { return edges_; }
  std::optional<std::size_t> vertex_index(const LatticePoint& p) const;
  const TinkertoyType& type() const { return type_; }
  /// Edge indices at vertex v.
  const std::array<std::size_t, 3>& incident_edges(std::size_t v) const { return incident_[v]; }

  /// The five honeycomb-tinkertoy conditions: finite, connected, full
  /// valence, nonempty, hexagon closure.
  bool satisfies_axioms() const;

  friend bool operator==(const Tinkertoy& a, const Tinkertoy& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<LatticePoint> vertices_;
  std::unordered_map<LatticePoint, std::size_t, LatticePointHash> index_;
  std::vector<TinkertoyEdge> edges_;
  std::vector<std::array<std::size_t, 3>> incident_;
  TinkertoyType type_{};
};

/// GL(n) tinkertoy: vertices in the triangle j + 3n >= i >= k >= j.
Tinkertoy build_gl_tinkertoy(int n);

/// Step along side k of a dual region, clockwise; side k faces the rays of
/// direction k.
LatticePoint dual_side_step(int k);

/// Side corners of the convex dual region for a type, clockwise, with the
/// start of the North side pinned at the origin. Throws TypeDoesNotClose.
std::array<LatticePoint, 6> dual_polygon(const TinkertoyType& t);

/// The unique tinkertoy of this type whose dual region starts at the origin.
/// Throws TypeDoesNotClose if the sides do not close up or enclose no area.
Tinkertoy build_tinkertoy_from_type(const TinkertoyType& t);

/// Root-lattice coordinates (a, b) with p = a*s_x + b*s_y.
std::pair<std::int64_t, std::int64_t> root_coordinates(const LatticePoint& p);

struct DualGraph {
  std::vector<LatticePoint> points;  // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// interior[i]: points[i] is the centre of a hexagon of the tinkertoy.
  std::vector<bool> interior;
  /// Side lengths of the region, in the order of the tinkertoy type.
  TinkertoyType side_lengths{};
  std::size_t triangle_count = 0;

  std::optional<std::size_t> index_of(const LatticePoint& p) const;
  /// Twice the area of the convex hull equals the triangle count.
  bool is_convex() const;
};

DualGraph dual_graph(const Tinkertoy& t);

}  // namespace hivecomb
