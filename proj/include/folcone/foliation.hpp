#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "folcone/ball.hpp"
#include "folcone/cone.hpp"
#include "folcone/error.hpp"
#include "folcone/markov.hpp"
#include "folcone/render.hpp"

namespace folcone {

/// Symbolic data of one disk decomposition of a sutured manifold. Cones live
/// in e-coordinates of H^1; loop classes are functionals in the dual
/// alpha-basis, <alpha_i, e_j> = delta_ij.
struct SuturedPresentation {
  std::string name;
  std::size_t dim = 0;
  LabelSet labels;
  std::optional<MarkovSystem> markov;
  std::optional<std::vector<LoopClass>> loop_classes;
  bool product = false;
  /// Linear maps of H^1 (dim x dim) generating sibling cones.
  std::vector<RatMatrix> symmetries;
  std::string notes;
};

/// Throws InputError if the presentation is inconsistent.
void validate(const SuturedPresentation& p);

/// Loop classes bounding the cone: enumerated minimal periods when transition
/// weights are present (cross-checked against any explicit classes),
/// otherwise the explicit list; empty for a product presentation.
std::vector<LoopClass> gather_loop_classes(const SuturedPresentation& p);

struct LabeledRay {
  IntVector ray;
  std::string label;
};

struct FoliationCone {
  std::string name;
  Cone cone;
  std::vector<LoopClass> generators_used;
  std::vector<LabeledRay> base;
  LabelSet labels;
};

/// Dual of the cone spanned by the loop classes; the full space when there
/// are none.
FoliationCone foliation_cone(const SuturedPresentation& p);

/// The cone and its images under the group generated by p.symmetries,
/// starting with fc itself.
std::vector<FoliationCone> symmetry_orbit(const SuturedPresentation& p, const FoliationCone& fc);

struct Fan {
  std::size_t dim = 0;
  std::vector<FoliationCone> cones;
  bool disjointness_verified = false;
};

class OverlapError : public VerificationError {
 public:
  OverlapError(std::size_t first, std::size_t second, IntVector witness);
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  const IntVector& witness() const { return witness_; }

 private:
  std::size_t first_;
  std::size_t second_;
  IntVector witness_;
};

/// Verifies pairwise disjoint interiors. Throws OverlapError with a witness
/// interior point of the overlap.
Fan assemble_fan(std::vector<FoliationCone> cones);

struct FaceCone {
  Cone cone;
  std::size_t negated;  // i in (-C_i) ∩ C_j
  std::size_t other;    // j
};

/// Full-dimensional (-C_i) ∩ C_j over ordered pairs, deduplicated, sorted.
std::vector<FaceCone> thurston_face_cones(const Fan& fan);

struct BallCrosscheck {
  struct FaceMatch {
    std::size_t facet;
    Cone cone;
    std::optional<std::size_t> face_cone;  // index into face_cones
  };
  std::vector<FaceCone> face_cones;
  std::vector<FaceMatch> faces;
  std::vector<std::size_t> unmatched_face_cones;
  bool ok() const;
};

BallCrosscheck ball_crosscheck(const Fan& fan, const PLBall& ball);

struct ClassLocation {
  struct Hit {
    std::size_t cone;
    Membership membership;
  };
  std::vector<Hit> containing;  // cones whose closure contains the class
  bool proper = false;
};

ClassLocation locate_class(const Fan& fan, const IntVector& x);

/// i^{-1}(C_- x C_+) for i : H^1(M) -> H^1(M_-) ⊕ H^1(M_+).
Cone mv_split_assembly(const RatMatrix& restriction, const Cone& c_minus, const Cone& c_plus);

/// Pulls every cone of `fan` back along the surjection p^* : H^1(M) -> H^1(M')
/// (kernel of dimension at most one) and re-verifies the result.
Fan disk_decomposition_transfer(const RatMatrix& p_star, const Fan& fan,
                                std::optional<LabelSet> labels = std::nullopt);

}  // namespace folcone
