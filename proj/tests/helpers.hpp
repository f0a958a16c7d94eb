#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "folcone/rational.hpp"

namespace testing_helpers {

inline folcone::IntVector iv(std::initializer_list<long> xs) {
  folcone::IntVector v;
  for (long x : xs) {
    v.emplace_back(x);
  }
  return v;
}

inline folcone::RatVector rv(std::initializer_list<const char*> xs) {
  folcone::RatVector v;
  for (const char* x : xs) {
    v.push_back(folcone::parse_rat(x));
  }
  return v;
}

inline std::vector<folcone::IntVector> ivs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<folcone::IntVector> out;
  for (auto r : rows) {
    out.push_back(iv(r));
  }
  return out;
}

inline folcone::RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = ivs(rows);
  return folcone::RatMatrix::from_rows(r, r.empty() ? 0 : r.front().size());
}

inline folcone::IntVector random_ivec(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  folcone::IntVector v;
  for (std::size_t i = 0; i < dim; ++i) {
    v.emplace_back(d(rng));
  }
  return v;
}

}  // namespace testing_helpers
