#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

struct NamedVector {
  std::string label;
  IntVector vector;
};

/// Names for the cohomology basis e_i, the dual homology basis alpha_i, and
/// derived classes such as e0 = -e1 - ... - ed.
struct LabelSet {
  std::vector<std::string> basis;
  std::vector<std::string> dual;
  std::vector<NamedVector> derived;

  static LabelSet defaults(std::size_t dim);
  std::size_t dim() const { return basis.size(); }
};

/// "e1", "-e0", or a combination such as "2e1 - e2".
std::string render_ray(const LabelSet& labels, const IntVector& ray);

/// Linear combination in the given names, "0" for the zero vector.
std::string render_combination(const std::vector<std::string>& names, const IntVector& v);

/// Inequality <f, x> >= 0 written in the dual labels, positive terms on the
/// left: "α2 >= α1", "α2 >= 0", "α1 <= 0".
std::string render_inequality(const LabelSet& labels, const IntVector& functional);

}  // namespace folcone
