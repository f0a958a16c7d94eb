#pragma once

#include <cstddef>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

/// Generator form of {x : <a, x> >= 0 for every constraint a}.
struct ConeGenerators {
  std::vector<IntVector> rays;       // extreme rays modulo the lineality space
  std::vector<IntVector> lineality;  // basis of the lineality space
};

/// Double description method with exact integer arithmetic. Constraints are
/// primitivized, deduplicated and inserted in lexicographic order; the
/// lineality space is split off as constraints arrive, so adjacency is
/// decided on a pointed cone with the combinatorial test.
ConeGenerators double_description(std::size_t dim, const std::vector<IntVector>& constraints);

}  // namespace folcone
