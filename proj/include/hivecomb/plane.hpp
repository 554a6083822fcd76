#pragma once

// Geometry of the plane {x + y + z = 0}: exact points, the six lattice
// directions, and segments/rays along them.

#include "hivecomb/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hivecomb {

/// Integer point of the plane. Used for tinkertoy vertices and dual-graph points.
struct LatticePoint {
  std::int64_t x = 0, y = 0, z = 0;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend LatticePoint operator*(std::int64_t k, LatticePoint a) { return {k * a.x, k * a.y, k * a.z}; }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  std::int64_t coord(int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

enum class Axis { X = 0, Y = 1, Z = 2 };

const char* to_string(Axis a);

/// Exact point with x + y + z = 0. All three coordinates are stored.
class PlanePoint {
 public:
  PlanePoint() = default;
  /// Throws std::invalid_argument unless x + y + z == 0.
  PlanePoint(Rational x, Rational y, Rational z);
  explicit PlanePoint(const LatticePoint& p) : x_(p.x), y_(p.y), z_(p.z) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }
  const Rational& coord(Axis a) const;

  bool is_lattice() const { return is_integer(x_) && is_integer(y_) && is_integer(z_); }
  /// Precondition: is_lattice().
  LatticePoint to_lattice() const;

  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b);
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b);
  friend PlanePoint operator*(const Rational& k, const PlanePoint& a);
  friend bool operator==(const PlanePoint& a, const PlanePoint& b) = default;
  friend std::strong_ordering operator<=>(const PlanePoint& a, const PlanePoint& b);

 private:
  Rational x_ = 0, y_ = 0, z_ = 0;
};

/// The six unit lattice steps, clockwise from North. In the drawing
/// convention z-constant lines are vertical:
///   N = (-1,1,0), NE = (-1,0,1), SE = (0,-1,1),
///   S = (1,-1,0), SW = (1,0,-1), NW = (0,1,-1).
enum class Direction { N = 0, NE = 1, SE = 2, S = 3, SW = 4, NW = 5 };

inline constexpr std::array<Direction, 6> kAllDirections = {Direction::N,  Direction::NE, Direction::SE,
                                                            Direction::S,  Direction::SW, Direction::NW};

inline int index(Direction d) { return static_cast<int>(d); }
inline Direction direction_from_index(int k) { return static_cast<Direction>(((k % 6) + 6) % 6); }
inline Direction opposite(Direction d) { return direction_from_index(index(d) + 3); }
LatticePoint unit_vector(Direction d);
/// The coordinate that stays fixed when moving along d.
Axis constant_axis(Direction d);
/// N, NE, SE: the direction in which the line parameter grows.
bool is_positive(Direction d);
/// Direction of the unit step v, if v is one of the six.
std::optional<Direction> direction_of_step(const LatticePoint& v);

const char* to_string(Direction d);
/// Throws std::invalid_argument for unknown names.
Direction parse_direction(const std::string& name);

/// Positive length or +infinity (a ray).
class Length {
 public:
  static Length infinite() { return Length(); }
  static Length finite(Rational v) { return Length(std::move(v)); }
  bool is_infinite() const { return infinite_; }
  /// Precondition: !is_infinite().
  const Rational& value() const { return value_; }
  friend bool operator==(const Length&, const Length&) = default;

 private:
  Length() : infinite_(true) {}
  explicit Length(Rational v) : infinite_(false), value_(std::move(v)) {}
  bool infinite_;
  Rational value_ = 0;
};

struct SegmentOrRay {
  PlanePoint base;
  Direction direction = Direction::N;
  Length length = Length::infinite();
  Rational multiplicity = 1;

  /// Throws std::invalid_argument if length or multiplicity is not positive.
  void validate() const;
  /// Precondition: finite length.
  PlanePoint end() const;
  friend bool operator==(const SegmentOrRay&, const SegmentOrRay&) = default;
};

/// Which coordinate is constant along s, and its value.
std::pair<Axis, Rational> constant_coordinate(const SegmentOrRay& s);

/// Position of p along lines of the given constant axis; it grows by one per
/// unit step in the positive direction of that line class.
const Rational& line_parameter(const PlanePoint& p, Axis constant);
/// Positive direction of lines with the given constant axis.
Direction positive_direction(Axis constant);

struct Intersection {
  enum class Kind { None, Point, Overlap };
  Kind kind = Kind::None;
  /// Kind::Point.
  std::optional<PlanePoint> point;
  /// Kind::Overlap: a segment oriented along the positive direction, or a ray
  /// pointing to infinity. Multiplicity is 1.
  std::optional<SegmentOrRay> overlap;
};

Intersection intersect(const SegmentOrRay& a, const SegmentOrRay& b);

/// Drawing coordinates (y up).
std::pair<double, double> screen_coordinates(const PlanePoint& p);

}  // namespace hivecomb
