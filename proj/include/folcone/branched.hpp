#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "folcone/cone.hpp"

namespace folcone {

/// Branch equations and loop/sector incidence of a branched surface.
/// Sectors on the tangential boundary carry infinite weight and are left out
/// of the unknown vector.
struct BranchedSurfaceData {
  std::size_t sectors = 0;
  std::vector<IntVector> equations;       // rows of B, B mu = 0
  std::vector<IntVector> loop_incidence;  // d rows of length `sectors`
};

void validate(const BranchedSurfaceData& b);

struct OertelCone {
  /// Closure of the cone of classes of strictly positive invariant measures.
  Cone cone;
  /// Extreme rays of W = {mu >= 0 : B mu = 0}.
  std::vector<IntVector> measure_rays;
  /// A strictly positive solution of the branch equations, when one exists.
  std::optional<IntVector> positive_measure;
  std::string note;
};

OertelCone oertel_cone(const BranchedSurfaceData& b);

/// Closure containment d_b ⊆ d_fol.
bool check_subcone(const Cone& d_b, const Cone& d_fol);

}  // namespace folcone
