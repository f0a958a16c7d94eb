#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace folcone {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational in canonical form: positive denominator, reduced, zero is 0/1.
/// gmpxx keeps results of arithmetic canonical; use make_rat / parse_rat for
/// construction from raw parts.
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

Rat make_rat(const Int& numerator, const Int& denominator);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// "(a, b, c)"
std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);

RatVector to_rat(const IntVector& v);
IntVector to_int(const RatVector& v);  // throws Error if any entry is non-integral

Rat dot(const RatVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);
Rat dot(const IntVector& a, const RatVector& b);

IntVector negated(IntVector v);
RatVector negated(RatVector v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector unit_vector(std::size_t dim, std::size_t index);

/// Row-major dense matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  RatMatrix transposed() const;

  /// Matrix-vector product; throws Error on shape mismatch.
  RatVector apply(const RatVector& x) const;
  /// Row-vector times matrix (f^T M); throws Error on shape mismatch.
  RatVector apply_left(const RatVector& f) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace folcone
