#pragma once

// Largest lifts. A superharmonic weighting w of the hexagons of the GL(n)
// tinkertoy turns the weighted perimeter into a linear functional on hives;
// maximizing it over the hive polytope of a boundary gives the largest lift.
// Inflating the hexagon at interior entry p is the hive direction +e_p: the
// six rhombi with p obtuse (the hexagon's edges) grow, the six with p acute
// shrink.

#include "hivecomb/diagram.hpp"
#include "hivecomb/elision.hpp"
#include "hivecomb/hive.hpp"
#include "hivecomb/honeycomb.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hivecomb {

/// Hive entries adjacent to p in the dual graph that lie in the triangle.
std::vector<HiveIndex> hive_neighbours(int n, HiveIndex p);

struct WeightFunction {
  int n = 2;
  /// Seed the perturbation was finally drawn from.
  std::uint64_t seed = 0;
  /// Values on hexagons (interior entries). Zero everywhere else.
  std::map<HiveIndex, Rational> values;

  Rational operator()(HiveIndex p) const;
  /// w(p) - (1/6) sum of w over the six neighbours.
  Rational superharmonic_slack(HiveIndex p) const;
  /// Positive on hexagons and strictly superharmonic at each of them.
  bool is_valid() const;
};

/// M - |P|^2 at the hexagon's dual point P, plus a seeded perturbation of
/// size below 1/2 with denominator 2^20. M = 1 + 6 max |P|^2.
WeightFunction make_weight_function(int n, std::uint64_t seed);

/// wperim as a linear functional of all hive entries. Interior coefficients
/// are 6 w(p) - sum of neighbours' w, hence positive.
struct ObjectiveVector {
  int n = 2;
  /// Row-major over every hive entry; boundary coefficients are <= 0.
  std::vector<Rational> coefficients;

  const Rational& operator[](HiveIndex p) const { return coefficients[HiveShape{n}.index(p.i, p.j)]; }
  Rational evaluate(const Hive& h) const;
};

ObjectiveVector wperim_objective(const WeightFunction& w);

/// Sum over hexagons of w times the perimeter, measured on the honeycomb.
Rational wperim(const Honeycomb& h, const WeightFunction& w);

struct InflationVector {
  int n = 2;
  /// Row-major over every hive entry, zero on the boundary.
  std::vector<Rational> direction;

  Hive apply(const Hive& h, const Rational& epsilon) const;
  /// Largest epsilon keeping h + epsilon i a hive, or nullopt if unbounded.
  std::optional<Rational> max_step(const Hive& h) const;
};

/// Unit vector at an interior entry. Throws InvalidInput otherwise.
InflationVector inflation_vector(int n, HiveIndex p);
/// Sum of the unit vectors at the given interior entries.
InflationVector inflation_vector(int n, const std::vector<HiveIndex>& entries);

/// Dual points (regions of the reconstructed tinkertoy) to inflate so that
/// vertex v of m molts: the points strictly inside v's dual region, plus the
/// points inside some of its sides. The sides follow the recipe for v's kind
/// (Y: two sides, crossing: an opposite pair, rake and 5-valent: one side,
/// 6-valent: none); of the rotations of the recipe the first whose small
/// multiples lengthen no collapsed edge of v negatively is returned. Throws
/// NotDegenerate for a multiplicity-one Y or crossing.
std::vector<LatticePoint> molt_regions(const Diagram& m, std::size_t v);

/// Optimality data of an exact simplex run.
struct LpCertificate {
  /// Terminal basis: column indices (variables first, then one slack per rhombus).
  std::vector<std::size_t> basis;
  /// One nonnegative multiplier per rhombus of rhombi(n): c + sum u_r grad(r) = 0
  /// on the interior entries, and u_r = 0 unless the rhombus is tight.
  std::vector<Rational> multipliers;
  /// The optimal face is a single hive.
  bool unique = true;
  std::size_t pivots = 0;
};

struct LpResult {
  Hive hive;
  Rational objective;
  LpCertificate certificate;
};

/// Maximizes the objective over the hive polytope of t by a two-phase dense
/// simplex over the rationals with Bland's rule. Throws Infeasible, or
/// Unbounded (which would contradict properness).
LpResult lp_maximize(const ObjectiveVector& objective, const BoundaryTriple& t);

/// Re-checks the certificate from scratch: hive validity, boundary,
/// nonnegative multipliers, stationarity and complementary slackness.
bool verify_certificate(const LpResult& r, const ObjectiveVector& objective, const BoundaryTriple& t);

struct LiftReport {
  Hive hive;
  bool integral = false;
  bool regular = false;
  std::map<VertexKind, std::size_t> vertex_kinds;
  Rational max_multiplicity;
  /// Every vertex a multiplicity-one Y or crossing.
  bool simply_degenerate = false;
  /// Post-elision graph is a forest; false when not simply degenerate.
  bool acyclic = false;
  Rational objective_value;
  LpCertificate certificate;
  /// Seed of the weight function that gave a unique optimum.
  std::uint64_t seed = 0;
  /// Re-perturbations needed because of a tie.
  int reperturbations = 0;

  bool has_six_valent() const;
};

/// Throws Infeasible, or DegenerateOptimum if ties persist after a few
/// re-perturbations of w.
LiftReport largest_lift(const BoundaryTriple& t, const WeightFunction& w);

/// Combinatorial data of a post-elision graph: finite edges join nodes,
/// rays name the boundary entry they carry.
struct ForestEdge {
  std::size_t from = 0;
  std::optional<std::size_t> to;
  /// Direction leaving `from`; for a ray one of NW (lambda), NE (mu), S (nu).
  Direction direction = Direction::N;
  /// Rays: index into the weight of that side.
  std::size_t rank = 0;
};

struct Forest {
  std::size_t node_count = 0;
  std::vector<ForestEdge> edges;
};

/// Ray ranks are read off the order of the constants within each direction.
Forest forest_data(const PostElisionGraph& g);

/// Constant coordinates of every edge, by stripping leaves: at a Y the three
/// constants sum to zero. Throws HasCycle unless the finite edges form a
/// forest, InvalidInput if a ray is not NW/NE/S or its rank is out of range.
std::vector<Rational> forest_solve(const BoundaryTriple& t, const Forest& forest);

/// Vertices of the hive polytope of t, exact and sorted (double description).
std::vector<Hive> hive_polytope_vertices(const BoundaryTriple& t);

struct NonintegralVertex {
  BoundaryTriple boundary;
  Hive vertex;
};

/// Scans integral dominant boundaries of rank n with lambda_n = mu_n = 0,
/// lambda <= mu lexicographically and lambda_1, mu_1 <= bound, and returns
/// the first polytope vertex with a nonintegral entry.
std::optional<NonintegralVertex> find_nonintegral_vertex(int n, int bound);

}  // namespace hivecomb
