#pragma once

#include "hivecomb/diagram.hpp"

#include <string>

namespace hivecomb {

struct SvgOptions {
  /// Pixels per unit of the plane.
  double scale = 40;
  /// Rays run this many units past the furthest vertex.
  double margin = 2;
};

/// One <path> per canonical segment, a <text> label for multiplicities above
/// one, and a <circle class="v-kind"> per vertex. z-constant lines are vertical.
std::string render_svg(const Diagram& m, const SvgOptions& options = {});

}  // namespace hivecomb
