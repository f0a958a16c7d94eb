#include "folcone/branched.hpp"

#include "folcone/error.hpp"
#include "folcone/linalg.hpp"

namespace folcone {

void validate(const BranchedSurfaceData& b) {
  if (b.sectors == 0) {
    throw InputError("branched surface needs at least one finite-weight sector");
  }
  for (const auto& row : b.equations) {
    if (row.size() != b.sectors) {
      throw InputError("branch equation has " + std::to_string(row.size()) + " coefficients, expected " +
                       std::to_string(b.sectors));
    }
    if (is_zero(row)) {
      throw InputError("branch equation rows must be nonzero");
    }
  }
  if (b.loop_incidence.empty()) {
    throw InputError("loop incidence needs at least one row");
  }
  for (const auto& row : b.loop_incidence) {
    if (row.size() != b.sectors) {
      throw InputError("loop incidence row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(b.sectors));
    }
  }
}

OertelCone oertel_cone(const BranchedSurfaceData& b) {
  validate(b);
  const std::size_t m = b.sectors;
  const std::size_t d = b.loop_incidence.size();

  std::vector<IntVector> constraints;
  for (std::size_t i = 0; i < m; ++i) {
    constraints.push_back(unit_vector(m, i));
  }
  for (const auto& row : b.equations) {
    constraints.push_back(row);
    constraints.push_back(negated(row));
  }
  const Cone solutions = Cone::from_inequalities(m, constraints);

  OertelCone out{Cone::zero(d), solutions.rays(), std::nullopt, ""};
  const RatMatrix s = RatMatrix::from_rows(b.loop_incidence, m);
  std::vector<RatVector> images;
  IntVector sum(m, Int(0));
  for (const auto& r : solutions.rays()) {
    images.push_back(s.apply(to_rat(r)));
    for (std::size_t i = 0; i < m; ++i) {
      sum[i] += r[i];
    }
  }
  out.cone = Cone::from_generators(d, images);

  if (solutions.rays().empty()) {
    out.note = "no positive measure";
    return out;
  }
  bool strictly_positive = true;
  for (const auto& z : sum) {
    strictly_positive = strictly_positive && z > 0;
  }
  if (strictly_positive) {
    out.positive_measure = primitive(sum);
    out.note = "positive measure exists";
  } else {
    out.note = "no strictly positive measure";
  }
  return out;
}

bool check_subcone(const Cone& d_b, const Cone& d_fol) {
  if (d_b.dim() != d_fol.dim()) {
    throw Error("check_subcone: dimensions " + std::to_string(d_b.dim()) + " and " +
                std::to_string(d_fol.dim()));
  }
  for (const auto& g : d_b.generators()) {
    if (!in_closure(d_fol, to_rat(g))) {
      return false;
    }
  }
  return true;
}

}  // namespace folcone
