#pragma once

#include <optional>
#include <string>

#include "folcone/ball.hpp"
#include "folcone/foliation.hpp"

namespace folcone {

struct PlotOptions {
  /// Affine slice <f, x> = 1 for three-dimensional fans.
  std::optional<RatVector> slice;
  /// Dashed overlay, two-dimensional fans only.
  const PLBall* ball = nullptr;
};

/// Deterministic SVG of a fan: sectors in dimension 2, base polygons of a
/// slice in dimension 3. Throws InputError when the fan cannot be drawn.
std::string plot_fan(const Fan& fan, const LabelSet& labels, const PlotOptions& options = {});

}  // namespace folcone
