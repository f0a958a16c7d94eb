#include "folcone/linalg.hpp"

#include <numeric>

#include "folcone/error.hpp"

namespace folcone {

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}, 0};
  RatMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(a(pivot, j), a(r, j));
      }
    }
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) {
        continue;
      }
      const Rat factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        a(i, j) -= factor * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto reduced = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : reduced.pivots) {
    is_pivot[p] = true;
  }
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RatVector v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
      v[reduced.pivots[i]] = -reduced.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive(const RatVector& v) {
  Int common_den = 1;
  for (const auto& q : v) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) {
    scaled.push_back(q.get_num() * (common_den / q.get_den()));
  }
  return primitive(scaled);
}

IntVector primitive(const IntVector& v) {
  Int g = 0;
  for (const auto& z : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g == 0) {
    throw Error("zero has no primitive direction");
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& z : v) {
    out.push_back(z / g);
  }
  return out;
}

std::vector<IntVector> row_space_basis(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) {
    return {};
  }
  const auto reduced = rref(RatMatrix::from_rows(rows, dim));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    basis.push_back(primitive(reduced.reduced.row(i)));
  }
  return basis;
}

RatVector project_out(const RatVector& v, const std::vector<IntVector>& basis) {
  // Gram-Schmidt over Q on the basis, then subtract components.
  std::vector<RatVector> ortho;
  for (const auto& b : basis) {
    RatVector u = to_rat(b);
    for (const auto& q : ortho) {
      const Rat coef = dot(u, q) / dot(q, q);
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] -= coef * q[i];
      }
    }
    if (!is_zero(u)) {
      ortho.push_back(std::move(u));
    }
  }
  RatVector out = v;
  for (const auto& q : ortho) {
    const Rat coef = dot(out, q) / dot(q, q);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] -= coef * q[i];
    }
  }
  return out;
}

RatMatrix right_inverse(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Solve m x = e_k for each k via rref of [m | I].
  RatMatrix aug(rows, cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      aug(r, c) = m(r, c);
    }
    aug(r, cols + r) = 1;
  }
  const auto reduced = rref(aug);
  std::size_t rank_m = 0;
  for (auto p : reduced.pivots) {
    if (p < cols) {
      ++rank_m;
    }
  }
  if (rank_m != rows) {
    throw Error("matrix is not surjective (rank " + std::to_string(rank_m) + " < " +
                std::to_string(rows) + ")");
  }
  RatMatrix inv(cols, rows);
  for (std::size_t i = 0; i < rank_m; ++i) {
    const std::size_t p = reduced.pivots[i];
    for (std::size_t k = 0; k < rows; ++k) {
      inv(p, k) = reduced.reduced(i, cols + k);
    }
  }
  return inv;
}

bool in_span(const IntVector& v, const std::vector<IntVector>& rows, std::size_t dim) {
  if (is_zero(v)) {
    return true;
  }
  if (rows.empty()) {
    return false;
  }
  std::vector<IntVector> extended = rows;
  extended.push_back(v);
  return rank(RatMatrix::from_rows(extended, dim)) == rank(RatMatrix::from_rows(rows, dim));
}

}  // namespace folcone
