#include "hivecomb/bz.hpp"

#include "hivecomb/errors.hpp"

namespace hivecomb {

namespace {

std::array<Axis, 2> other_axes(Axis a) {
  switch (a) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::Z, Axis::X};
    case Axis::Z: return {Axis::X, Axis::Y};
  }
  return {};
}

}  // namespace

Rational dual_edge_length(const Hive& h, const LatticePoint& p, Axis a) {
  const int n = h.n();
  auto at = [&](const LatticePoint& q) { return h(dual_point_hive_index(n, q)); };
  const auto [b, c] = other_axes(a);
  // Obtuse pair P, P + s_a; acute pair P - s_b, P - s_c.
  return at(p) + at(p + root_step(a)) - at(p - root_step(b)) - at(p - root_step(c));
}

Rational hexagon_torsion(const Hive& h, const LatticePoint& p, Axis frame) {
  return dual_edge_length(h, p - root_step(frame), frame) - dual_edge_length(h, p, frame);
}

BZPattern bz_pattern(const Honeycomb& honey) {
  const Hive h = honeycomb_to_hive(honey);
  const int n = h.n();
  BZPattern out;
  out.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const bool corner = (i == 0 && j == 0) || (i == 0 && j == n) || (i == n && j == 0);
      if (corner) continue;
      const LatticePoint p = hive_dual_point(n, i, j);
      Rational value;
      if (i == 0) {
        // Wedge between two NW rays: its SE edge.
        value = dual_edge_length(h, p - root_step(Axis::Y), Axis::Y);
      } else if (i + j == n) {
        // Wedge between two NE rays: its west edge.
        value = dual_edge_length(h, p - root_step(Axis::Z), Axis::Z);
      } else if (j == 0) {
        // Wedge between two S rays: its NE edge.
        value = dual_edge_length(h, p - root_step(Axis::X), Axis::X);
      } else {
        value = hexagon_torsion(h, p, Axis::Z);
      }
      out.entries.emplace(HiveIndex{i, j}, value);
    }
  return out;
}

}  // namespace hivecomb
