#include "hivecomb/plane.hpp"

#include <cmath>
#include <stdexcept>

namespace hivecomb {

namespace {

constexpr std::array<LatticePoint, 6> kUnit = {{
    {-1, 1, 0},  // N
    {-1, 0, 1},  // NE
    {0, -1, 1},  // SE
    {1, -1, 0},  // S
    {1, 0, -1},  // SW
    {0, 1, -1},  // NW
}};

constexpr std::array<const char*, 6> kNames = {"N", "NE", "SE", "S", "SW", "NW"};

}  // namespace

const char* to_string(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

PlanePoint::PlanePoint(Rational x, Rational y, Rational z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_ + y_ + z_ != 0) throw std::invalid_argument("plane point coordinates must sum to zero");
}

const Rational& PlanePoint::coord(Axis a) const {
  switch (a) {
    case Axis::X: return x_;
    case Axis::Y: return y_;
    case Axis::Z: return z_;
  }
  return x_;
}

LatticePoint PlanePoint::to_lattice() const { return {to_int64(x_), to_int64(y_), to_int64(z_)}; }

PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) {
  PlanePoint r;
  r.x_ = a.x_ + b.x_;
  r.y_ = a.y_ + b.y_;
  r.z_ = a.z_ + b.z_;
  return r;
}

PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) {
  PlanePoint r;
  r.x_ = a.x_ - b.x_;
  r.y_ = a.y_ - b.y_;
  r.z_ = a.z_ - b.z_;
  return r;
}

PlanePoint operator*(const Rational& k, const PlanePoint& a) {
  PlanePoint r;
  r.x_ = k * a.x_;
  r.y_ = k * a.y_;
  r.z_ = k * a.z_;
  return r;
}

std::strong_ordering operator<=>(const PlanePoint& a, const PlanePoint& b) {
  if (a.x_ != b.x_) return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.y_ != b.y_) return a.y_ < b.y_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LatticePoint unit_vector(Direction d) { return kUnit[index(d)]; }

Axis constant_axis(Direction d) {
  switch (index(d) % 3) {
    case 0: return Axis::Z;
    case 1: return Axis::Y;
    default: return Axis::X;
  }
}

bool is_positive(Direction d) { return index(d) < 3; }

Direction positive_direction(Axis constant) {
  switch (constant) {
    case Axis::Z: return Direction::N;
    case Axis::Y: return Direction::NE;
    case Axis::X: return Direction::SE;
  }
  return Direction::N;
}

std::optional<Direction> direction_of_step(const LatticePoint& v) {
  for (int k = 0; k < 6; ++k)
    if (kUnit[k] == v) return direction_from_index(k);
  return std::nullopt;
}

const char* to_string(Direction d) { return kNames[index(d)]; }

Direction parse_direction(const std::string& name) {
  for (int k = 0; k < 6; ++k)
    if (name == kNames[k]) return direction_from_index(k);
  throw std::invalid_argument("unknown direction '" + name + "'");
}

void SegmentOrRay::validate() const {
  if (!length.is_infinite() && length.value() <= 0) throw std::invalid_argument("segment length must be positive");
  if (multiplicity <= 0) throw std::invalid_argument("segment multiplicity must be positive");
}

PlanePoint SegmentOrRay::end() const { return base + length.value() * PlanePoint(unit_vector(direction)); }

std::pair<Axis, Rational> constant_coordinate(const SegmentOrRay& s) {
  const Axis a = constant_axis(s.direction);
  return {a, s.base.coord(a)};
}

const Rational& line_parameter(const PlanePoint& p, Axis constant) {
  // N = (-1,1,0) raises y; NE = (-1,0,1) and SE = (0,-1,1) raise z.
  return constant == Axis::Z ? p.y() : p.z();
}

namespace {

/// Closed parameter interval; nullopt ends are infinite.
struct Interval {
  std::optional<Rational> lo, hi;
};

Interval interval_of(const SegmentOrRay& s) {
  const Axis a = constant_axis(s.direction);
  const Rational t = line_parameter(s.base, a);
  Interval iv;
  if (is_positive(s.direction)) {
    iv.lo = t;
    if (!s.length.is_infinite()) iv.hi = t + s.length.value();
  } else {
    iv.hi = t;
    if (!s.length.is_infinite()) iv.lo = t - s.length.value();
  }
  return iv;
}

PlanePoint point_on_line(Axis constant, const Rational& c, const Rational& t) {
  // Inverse of line_parameter on the line {coord(constant) = c}.
  switch (constant) {
    case Axis::Z: return PlanePoint(-c - t, t, c);
    case Axis::Y: return PlanePoint(-c - t, c, t);
    case Axis::X: return PlanePoint(c, -c - t, t);
  }
  return {};
}

bool contains(const Interval& iv, const Rational& t) {
  return (!iv.lo || *iv.lo <= t) && (!iv.hi || t <= *iv.hi);
}

}  // namespace

Intersection intersect(const SegmentOrRay& a, const SegmentOrRay& b) {
  const auto [axis_a, ca] = constant_coordinate(a);
  const auto [axis_b, cb] = constant_coordinate(b);
  Intersection out;
  if (axis_a == axis_b) {
    if (ca != cb) return out;
    const Interval ia = interval_of(a), ib = interval_of(b);
    std::optional<Rational> lo, hi;
    if (ia.lo && ib.lo) lo = std::max(*ia.lo, *ib.lo);
    else if (ia.lo) lo = ia.lo;
    else lo = ib.lo;
    if (ia.hi && ib.hi) hi = std::min(*ia.hi, *ib.hi);
    else if (ia.hi) hi = ia.hi;
    else hi = ib.hi;
    if (lo && hi && *lo > *hi) return out;
    if (lo && hi && *lo == *hi) {
      out.kind = Intersection::Kind::Point;
      out.point = point_on_line(axis_a, ca, *lo);
      return out;
    }
    SegmentOrRay s;
    if (lo) {
      s.base = point_on_line(axis_a, ca, *lo);
      s.direction = positive_direction(axis_a);
      s.length = hi ? Length::finite(*hi - *lo) : Length::infinite();
    } else {
      // Both inputs are rays pointing the negative way; hi is finite.
      s.base = point_on_line(axis_a, ca, *hi);
      s.direction = opposite(positive_direction(axis_a));
      s.length = Length::infinite();
    }
    out.kind = Intersection::Kind::Overlap;
    out.overlap = s;
    return out;
  }
  // Transversal lines meet at the point whose two constant coordinates are fixed.
  Rational coords[3];
  const int ka = static_cast<int>(axis_a), kb = static_cast<int>(axis_b);
  coords[ka] = ca;
  coords[kb] = cb;
  coords[3 - ka - kb] = -ca - cb;
  PlanePoint p(coords[0], coords[1], coords[2]);
  if (contains(interval_of(a), line_parameter(p, axis_a)) && contains(interval_of(b), line_parameter(p, axis_b))) {
    out.kind = Intersection::Kind::Point;
    out.point = p;
  }
  return out;
}

std::pair<double, double> screen_coordinates(const PlanePoint& p) {
  const double y = p.y().convert_to<double>();
  const double z = p.z().convert_to<double>();
  return {std::sqrt(3.0) / 2.0 * z, y + z / 2.0};
}

}  // namespace hivecomb
