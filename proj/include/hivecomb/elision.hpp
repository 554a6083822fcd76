#pragma once

// Elision of simple degeneracies: the abstract graph whose nodes are the Y
// vertices of a diagram and whose edges follow straight chains of segments
// through crossings. Breathing moves one loop of that graph.

#include "hivecomb/diagram.hpp"
#include "hivecomb/honeycomb.hpp"

#include <optional>
#include <vector>

namespace hivecomb {

struct ElidedEdge {
  std::size_t from = 0;
  /// nullopt for an edge that runs off to infinity.
  std::optional<std::size_t> to;
  /// Direction leaving `from`.
  Direction direction = Direction::N;
  Axis axis = Axis::X;
  Rational constant;
  /// Indices into Diagram::segments() along the chain, starting at `from`.
  std::vector<std::size_t> segments;
};

struct PostElisionGraph {
  /// Indices into Diagram::vertices() of the Y vertices, in that order.
  std::vector<std::size_t> nodes;
  std::vector<ElidedEdge> edges;

  std::size_t node_of_vertex(std::size_t diagram_vertex) const;
  /// The finite-edge subgraph is a forest.
  bool is_acyclic() const;
  /// A cycle as an ordered list of finite edge indices, if any.
  std::optional<std::vector<std::size_t>> find_cycle() const;
};

/// Throws NotSimplyDegenerate unless every vertex is a multiplicity-one Y or
/// crossing.
PostElisionGraph elide(const Diagram& m);

/// Largest |epsilon| in the given direction (sign of `sign`) keeping every
/// moved edge nonnegative, or nullopt if unbounded.
std::optional<Rational> breathing_bound(const Honeycomb& h, const std::vector<std::size_t>& loop, int sign);

/// Shifts the lines of the loop edges (finite edge indices of
/// elide(diagram(h)), forming a cycle) outward by epsilon in constant
/// coordinate, and rebuilds the honeycomb. Throws EpsilonTooLarge when a
/// moved edge would get negative length, InvalidInput if loop is not a cycle.
Honeycomb breathe_loop(const Honeycomb& h, const std::vector<std::size_t>& loop, const Rational& epsilon);

}  // namespace hivecomb
