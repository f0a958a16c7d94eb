#include "folcone/double_description.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "folcone/error.hpp"
#include "folcone/linalg.hpp"

namespace folcone {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector v;
  Bits tight;  // processed constraints satisfied with equality
};

// p * a - q * b, primitivized.
IntVector combine(const Int& p, const IntVector& a, const Int& q, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = p * a[i] - q * b[i];
  }
  return primitive(out);
}

}  // namespace

ConeGenerators double_description(std::size_t dim, const std::vector<IntVector>& constraints) {
  std::vector<IntVector> rows;
  for (const auto& a : constraints) {
    if (a.size() != dim) {
      throw Error("constraint has dimension " + std::to_string(a.size()) + ", expected " +
                  std::to_string(dim));
    }
    if (!is_zero(a)) {
      rows.push_back(primitive(a));
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const std::size_t m = rows.size();

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    lineality.push_back(unit_vector(dim, i));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = rows[k];

    auto hit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const IntVector& l) { return dot(a, l) != 0; });
    if (hit != lineality.end()) {
      IntVector dir = *hit;
      Int s = dot(a, dir);
      if (s < 0) {
        dir = negated(std::move(dir));
        s = -s;
      }
      lineality.erase(hit);
      for (auto& l : lineality) {
        const Int t = dot(a, l);
        if (t != 0) {
          l = combine(s, l, t, dir);
        }
      }
      for (auto& r : rays) {
        const Int t = dot(a, r.v);
        if (t != 0) {
          r.v = combine(s, r.v, t, dir);
        }
        r.tight.resize(m);
        r.tight.set(k);
      }
      Bits tight(m);
      for (std::size_t j = 0; j < k; ++j) {
        tight.set(j);
      }
      rays.push_back({std::move(dir), std::move(tight)});
      continue;
    }

    std::vector<std::size_t> pos, zero, neg;
    std::vector<Int> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      rays[i].tight.resize(m);
      val[i] = dot(a, rays[i].v);
      const int sign = sgn(val[i]);
      if (sign > 0) {
        pos.push_back(i);
      } else if (sign < 0) {
        neg.push_back(i);
      } else {
        zero.push_back(i);
        rays[i].tight.set(k);
      }
    }
    if (neg.empty()) {
      continue;
    }

    std::vector<Ray> next;
    for (auto i : pos) {
      next.push_back(rays[i]);
    }
    for (auto i : zero) {
      next.push_back(rays[i]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        const Bits common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && common.is_subset_of(rays[r].tight)) {
            adjacent = false;
          }
        }
        if (!adjacent) {
          continue;
        }
        // val[p] > 0 > val[n]: the combination lies on the hyperplane.
        IntVector v = combine(val[p], rays[n].v, val[n], rays[p].v);
        Bits tight = common;
        tight.set(k);
        next.push_back({std::move(v), std::move(tight)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) {
    out.rays.push_back(std::move(r.v));
  }
  return out;
}

}  // namespace folcone
