#pragma once

// Hives: triangular arrays of rationals indexed by (i, j), i, j >= 0,
// i + j <= n, with the zero corner (0, 0) at the top. The boundary read
// clockwise from the top climbs by lambda along i = 0, then by mu along
// i + j = n, then by nu along j = 0 back to the top.

#include "hivecomb/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hivecomb {

/// A GL(n) weight. Counting operations require integral entries.
using Weight = std::vector<Rational>;

Weight make_weight(std::initializer_list<std::int64_t> values);
bool is_dominant(const Weight& w);
bool is_integral(const Weight& w);
Rational weight_sum(const Weight& w);

struct HiveIndex {
  int i = 0, j = 0;
  friend auto operator<=>(const HiveIndex&, const HiveIndex&) = default;
};

struct HiveShape {
  int n = 1;

  std::size_t size() const { return static_cast<std::size_t>((n + 1) * (n + 2) / 2); }
  /// Row-major position: row r = i + j, then j.
  std::size_t index(int i, int j) const {
    const int r = i + j;
    return static_cast<std::size_t>(r * (r + 1) / 2 + j);
  }
  HiveIndex at(std::size_t k) const;
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i + j <= n; }
  bool is_boundary(int i, int j) const { return i == 0 || j == 0 || i + j == n; }
  friend bool operator==(const HiveShape&, const HiveShape&) = default;
  /// Boundary indices clockwise from the top: lambda side, mu side, nu side.
  std::vector<HiveIndex> boundary_cycle() const;
  /// Interior indices in row-major order.
  std::vector<HiveIndex> interior() const;
};

struct Rhombus {
  std::array<HiveIndex, 2> obtuse;
  std::array<HiveIndex, 2> acute;
  /// 0: acute pair along (1,1); 1: along (1,-2); 2: along (-2,1).
  int orientation = 0;
};

/// Every rhombus of the size-n triangle, 3n(n-1)/2 of them, in a fixed order.
std::vector<Rhombus> rhombi(int n);

class Hive {
 public:
  Hive() = default;
  /// Throws std::invalid_argument on a size mismatch.
  Hive(int n, std::vector<Rational> entries);
  static Hive zero(int n) { return Hive(n, std::vector<Rational>(HiveShape{n}.size())); }

  int n() const { return shape_.n; }
  const HiveShape& shape() const { return shape_; }
  const Rational& operator()(int i, int j) const { return entries_[shape_.index(i, j)]; }
  Rational& operator()(int i, int j) { return entries_[shape_.index(i, j)]; }
  const Rational& operator()(HiveIndex p) const { return (*this)(p.i, p.j); }
  Rational& operator()(HiveIndex p) { return (*this)(p.i, p.j); }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Hive&, const Hive&) = default;
  friend bool operator<(const Hive& a, const Hive& b) { return a.entries_ < b.entries_; }

 private:
  HiveShape shape_;
  std::vector<Rational> entries_;
};

Rational rhombus_value(const Hive& h, const Rhombus& r);
/// Index into rhombi(n) of the first negative rhombus, if any.
std::optional<std::size_t> first_violated_rhombus(const Hive& h);
/// Throws RhombusViolation.
void validate_hive(const Hive& h);

struct BoundaryTriple {
  Weight lambda, mu, nu;

  int n() const { return static_cast<int>(lambda.size()); }
  /// Throws InvalidInput on length mismatch, ZeroSumViolation on a nonzero sum.
  void validate() const;
  bool is_dominant() const;
  bool is_regular() const;
  bool is_integral() const;
};

/// Hive whose boundary holds the partial sums of (lambda, mu, nu); interior
/// entries are zero placeholders. Throws ZeroSumViolation.
Hive boundary_from_weights(const BoundaryTriple& t);
/// Inverse reading of the boundary of any hive.
BoundaryTriple boundary_of(const Hive& h);

/// Lattice points of the hive polytope. Boundaries must be integral
/// (InvalidInput otherwise). Results are sorted lexicographically.
std::uint64_t count_lattice_hives(const BoundaryTriple& t);
std::vector<Hive> enumerate_lattice_hives(const BoundaryTriple& t, std::size_t limit = SIZE_MAX);
bool has_lattice_hive(const BoundaryTriple& t);

/// sigma with multiplicity c(lambda, mu; sigma), sorted lexicographically.
std::vector<std::pair<Weight, std::uint64_t>> decompose_tensor_product(const Weight& lambda, const Weight& mu);

/// Integer Gelfand-Cetlin patterns with top row lambda.
std::uint64_t count_gt_patterns(const Weight& lambda);

/// Small triangles of the hive: up (i,j),(i+1,j),(i,j+1) and down
/// (i+1,j),(i,j+1),(i+1,j+1).
struct HiveTriangle {
  int i = 0, j = 0;
  bool up = true;
  std::array<HiveIndex, 3> corners() const;
  friend auto operator<=>(const HiveTriangle&, const HiveTriangle&) = default;
};

std::vector<HiveTriangle> hive_triangles(int n);

/// Regions on which the piecewise-linear hive function is affine: classes of
/// triangles joined through zero rhombi. Each region is sorted; regions are
/// sorted by their first triangle.
std::vector<std::vector<HiveTriangle>> flatspace_decomposition(const Hive& h);

}  // namespace hivecomb
