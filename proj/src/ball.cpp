#include "folcone/ball.hpp"

#include <algorithm>
#include <set>

#include "folcone/error.hpp"
#include "folcone/linalg.hpp"

namespace folcone {

PLBall ball_from_vertices(std::size_t dim, const std::vector<RatVector>& vertices) {
  if (dim == 0) {
    throw InputError("ball dimension must be at least 1");
  }
  std::set<RatVector> pts;
  for (const auto& v : vertices) {
    if (v.size() != dim) {
      throw InputError("ball vertex " + to_string(v) + " does not have dimension " +
                       std::to_string(dim));
    }
    pts.insert(v);
  }
  for (const auto& v : pts) {
    if (!pts.count(negated(v))) {
      throw InputError("ball vertices are not centrally symmetric: " + to_string(negated(v)) +
                       " missing");
    }
  }

  std::vector<RatVector> lifted;
  for (const auto& v : pts) {
    RatVector h = v;
    h.emplace_back(1);
    lifted.push_back(std::move(h));
  }
  const Cone hom = Cone::from_generators(dim + 1, lifted);
  if (!hom.is_full_dimensional()) {
    throw InputError("0 is not an interior point of the ball");
  }

  PLBall ball;
  ball.dim_ = dim;
  for (const auto& r : hom.rays()) {
    // Every ray of the cone over a polytope at height 1 has last coordinate > 0.
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Rat(r[i]) / Rat(r[dim]);
    }
    ball.vertices_.push_back(std::move(v));
  }
  std::sort(ball.vertices_.begin(), ball.vertices_.end());

  for (const auto& f : hom.facets()) {
    // <a, x> + b t >= 0 becomes <-a/b, x> <= 1, which needs b > 0.
    const Rat b = f[dim];
    if (b <= 0) {
      throw InputError("0 is not an interior point of the ball");
    }
    BallFacet facet;
    for (std::size_t i = 0; i < dim; ++i) {
      facet.functional.push_back(-Rat(f[i]) / b);
    }
    for (std::size_t k = 0; k < ball.vertices_.size(); ++k) {
      if (dot(facet.functional, ball.vertices_[k]) == 1) {
        facet.vertices.push_back(k);
      }
    }
    if (facet.vertices.size() < dim) {
      throw Error("ball facet saturated by fewer than " + std::to_string(dim) + " vertices");
    }
    ball.facets_.push_back(std::move(facet));
  }
  std::sort(ball.facets_.begin(), ball.facets_.end(),
            [](const BallFacet& a, const BallFacet& b) { return a.functional < b.functional; });
  return ball;
}

Cone PLBall::face_cone(std::size_t i) const {
  std::vector<RatVector> gens;
  for (auto k : facets_.at(i).vertices) {
    gens.push_back(vertices_[k]);
  }
  return Cone::from_generators(dim_, gens);
}

Rat norm_eval(const PLBall& ball, const RatVector& x) {
  if (x.size() != ball.dim()) {
    throw Error("point of dimension " + std::to_string(x.size()) + " for a ball of dimension " +
                std::to_string(ball.dim()));
  }
  Rat best = 0;
  for (const auto& f : ball.facets()) {
    best = std::max(best, Rat(dot(f.functional, x)));
  }
  return best;
}

}  // namespace folcone
