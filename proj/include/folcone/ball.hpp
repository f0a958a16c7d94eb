#pragma once

#include <cstddef>
#include <vector>

#include "folcone/cone.hpp"
#include "folcone/rational.hpp"

namespace folcone {

/// A facet {x : <functional, x> <= 1} of a polytope with 0 in its interior,
/// together with the vertices lying on it.
struct BallFacet {
  RatVector functional;
  std::vector<std::size_t> vertices;  // indices into PLBall::vertices()
};

/// Centrally symmetric polytope with 0 in its interior; the unit ball of a
/// piecewise-linear norm.
class PLBall {
 public:
  std::size_t dim() const { return dim_; }
  /// Extreme points, sorted.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<BallFacet>& facets() const { return facets_; }

  /// Cone over the facet with index i.
  Cone face_cone(std::size_t i) const;

 private:
  friend PLBall ball_from_vertices(std::size_t dim, const std::vector<RatVector>& vertices);
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<BallFacet> facets_;
};

/// Facet description by converting the cone over {(v, 1)}. Throws InputError
/// if the vertex set is not centrally symmetric or 0 is not interior.
PLBall ball_from_vertices(std::size_t dim, const std::vector<RatVector>& vertices);

/// max over facets of <f, x>, i.e. min{t >= 0 : x in t B}.
Rat norm_eval(const PLBall& ball, const RatVector& x);

}  // namespace folcone
