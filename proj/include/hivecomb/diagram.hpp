#pragma once

// Honeycomb diagrams: measures on the plane supported on lattice-direction
// segments and rays. The canonical form splits each line at every diagram
// vertex and nowhere else, so two measures are equal iff their canonical
// segment lists are.

#include "hivecomb/honeycomb.hpp"
#include "hivecomb/plane.hpp"

#include <array>
#include <vector>

namespace hivecomb {

enum class VertexKind { Y, InvertedY, Crossing, Rake, FiveValent, SixValent };

const char* to_string(VertexKind k);

/// Outgoing multiplicities at a point, indexed by direction (clockwise from N).
using LocalMultiplicities = std::array<Rational, 6>;

/// Throws TensionViolation if the weighted sum of directions is nonzero,
/// UnknownPattern if fewer than three rays are used.
VertexKind classify_vertex(const LocalMultiplicities& m);

struct DiagramVertex {
  PlanePoint location;
  VertexKind kind = VertexKind::Y;
  LocalMultiplicities multiplicities;

  /// Largest outgoing multiplicity.
  Rational max_multiplicity() const;
  friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

class Diagram {
 public:
  Diagram() = default;

  /// Canonical form of the measure sum of the pieces. Collinear overlaps add.
  /// Throws NotADiagram(Tension) if a vertex fails zero tension and
  /// NotADiagram(ParallelLines) if a whole line carries no vertex.
  static Diagram canonicalize(const std::vector<SegmentOrRay>& pieces);

  const std::vector<SegmentOrRay>& segments() const { return segments_; }
  const std::vector<DiagramVertex>& vertices() const { return vertices_; }
  /// Index of the vertex at p, if any.
  std::optional<std::size_t> vertex_at(const PlanePoint& p) const;

  /// Semi-infinite multiplicity per direction.
  TinkertoyType ray_census() const;
  bool has_integral_multiplicities() const;
  /// Support connected through shared vertices.
  bool is_connected() const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.segments_ == b.segments_; }
  friend Diagram operator+(const Diagram& a, const Diagram& b);

 private:
  std::vector<SegmentOrRay> segments_;
  std::vector<DiagramVertex> vertices_;
};

/// Lebesgue measure on every edge interval of h, canonicalized.
Diagram diagram(const Honeycomb& h);

/// Outgoing multiplicities of the measure at p (zero if p is off the support).
LocalMultiplicities local_multiplicities(const Diagram& m, const PlanePoint& p);

/// Deterministic ordering used by the canonical form.
bool segment_less(const SegmentOrRay& a, const SegmentOrRay& b);

}  // namespace hivecomb
