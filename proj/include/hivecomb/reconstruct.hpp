#pragma once

// Rebuilding a honeycomb from its diagram: every diagram vertex owns a convex
// region of the dual graph whose side lengths are its outgoing
// multiplicities; regions are glued along finite segments and anchored on
// the boundary by the rays, and each tinkertoy vertex is then placed at the
// diagram vertex whose region contains its root triangle.

#include "hivecomb/diagram.hpp"
#include "hivecomb/honeycomb.hpp"

#include <vector>

namespace hivecomb {

/// Throws NotADiagram with the reason. The tinkertoy is the one returned by
/// build_tinkertoy_from_type for the ray census of m.
Honeycomb reconstruct(const Diagram& m);

/// Side corners (dual polygon) of every diagram vertex's region, in the
/// order of m.vertices(). Throws as reconstruct.
std::vector<std::array<LatticePoint, 6>> vertex_regions(const Diagram& m);

/// The honeycomb whose diagram is diagram(a) + diagram(b).
Honeycomb overlay(const Honeycomb& a, const Honeycomb& b);

/// The GL(1) honeycomb: one vertex at (a, b, -a-b).
Honeycomb tripod(const Rational& a, const Rational& b);

/// Overlay of the tripods (lambda_{w(i)}, mu_{v(i)}). w and v are
/// permutations of 0..n-1. Throws NotDominant unless w.lambda + v.mu is
/// weakly decreasing.
Honeycomb prv_witness(const Weight& lambda, const Weight& mu, const std::vector<int>& w, const std::vector<int>& v);

}  // namespace hivecomb
