#pragma once

#include <cstddef>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing column
/// order, with a 1 in that free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Integer vector with gcd 1 that is a positive multiple of v.
/// Throws Error("zero has no primitive direction") for v == 0.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

/// Canonical basis of the row space of `rows`: the nonzero rows of the rref,
/// each scaled to a primitive integer vector.
std::vector<IntVector> row_space_basis(const std::vector<IntVector>& rows, std::size_t dim);

/// Orthogonal projection of v onto the complement of span(basis).
RatVector project_out(const RatVector& v, const std::vector<IntVector>& basis);

/// A matrix R with m * R = I. Throws Error unless m has full row rank.
RatMatrix right_inverse(const RatMatrix& m);

/// True when v is in the row space of `rows`.
bool in_span(const IntVector& v, const std::vector<IntVector>& rows, std::size_t dim);

}  // namespace folcone
