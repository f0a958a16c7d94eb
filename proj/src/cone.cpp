#include "folcone/cone.hpp"

#include <algorithm>
#include <sstream>

#include "folcone/double_description.hpp"
#include "folcone/error.hpp"
#include "folcone/linalg.hpp"

namespace folcone {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Interior:
      return "interior";
    case Membership::Boundary:
      return "boundary";
    case Membership::Outside:
      return "outside";
  }
  return "outside";
}

namespace {

void check_dims(std::size_t dim, const std::vector<IntVector>& vs) {
  if (dim == 0) {
    throw Error("cone dimension must be at least 1");
  }
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw Error("vector of dimension " + std::to_string(v.size()) + " in a cone of dimension " +
                  std::to_string(dim));
    }
  }
}

std::vector<IntVector> to_primitive_list(const std::vector<RatVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    if (is_zero(v)) {
      out.emplace_back(v.size(), Int(0));
    } else {
      out.push_back(primitive(v));
    }
  }
  return out;
}

std::vector<IntVector> canonical_modulo(const std::vector<IntVector>& vs,
                                        const std::vector<IntVector>& subspace) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    const RatVector p = project_out(to_rat(v), subspace);
    if (!is_zero(p)) {
      out.push_back(primitive(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> with_negatives(const std::vector<IntVector>& basis) {
  std::vector<IntVector> out;
  for (const auto& b : basis) {
    out.push_back(b);
    out.push_back(negated(b));
  }
  return out;
}

}  // namespace

Cone::Cone(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality,
           std::vector<IntVector> proper_facets, std::vector<IntVector> equalities)
    : dim_(dim) {
  lineality_ = row_space_basis(lineality, dim);
  equalities_ = row_space_basis(equalities, dim);
  rays_ = canonical_modulo(rays, lineality_);
  facets_ = canonical_modulo(proper_facets, equalities_);
  for (auto& g : with_negatives(equalities_)) {
    facets_.push_back(std::move(g));
  }
  std::sort(facets_.begin(), facets_.end());
}

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVector>& generators) {
  check_dims(dim, generators);
  // Facets of cone(G) are the extreme rays of its dual {f : <f, g> >= 0}.
  const auto dual_gens = double_description(dim, generators);
  std::vector<IntVector> hrep = dual_gens.rays;
  for (auto& e : with_negatives(dual_gens.lineality)) {
    hrep.push_back(std::move(e));
  }
  const auto primal = double_description(dim, hrep);
  return Cone(dim, primal.rays, primal.lineality, dual_gens.rays, dual_gens.lineality);
}

Cone Cone::from_generators(std::size_t dim, const std::vector<RatVector>& generators) {
  return from_generators(dim, to_primitive_list(generators));
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<IntVector>& functionals) {
  check_dims(dim, functionals);
  const auto primal = double_description(dim, functionals);
  std::vector<IntVector> vrep = primal.rays;
  for (auto& l : with_negatives(primal.lineality)) {
    vrep.push_back(std::move(l));
  }
  const auto dual_gens = double_description(dim, vrep);
  return Cone(dim, primal.rays, primal.lineality, dual_gens.rays, dual_gens.lineality);
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<RatVector>& functionals) {
  return from_inequalities(dim, to_primitive_list(functionals));
}

Cone Cone::full_space(std::size_t dim) { return from_inequalities(dim, std::vector<IntVector>{}); }

Cone Cone::zero(std::size_t dim) { return from_generators(dim, std::vector<IntVector>{}); }

std::vector<IntVector> Cone::proper_facets() const {
  std::vector<IntVector> out;
  for (const auto& f : facets_) {
    if (!in_span(f, equalities_, dim_)) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> out = rays_;
  for (auto& l : with_negatives(lineality_)) {
    out.push_back(std::move(l));
  }
  return out;
}

bool operator==(const Cone& a, const Cone& b) {
  return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_ &&
         a.facets_ == b.facets_;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.dim_ != b.dim_) {
    return a.dim_ < b.dim_;
  }
  if (a.rays_ != b.rays_) {
    return a.rays_ < b.rays_;
  }
  if (a.lineality_ != b.lineality_) {
    return a.lineality_ < b.lineality_;
  }
  return a.facets_ < b.facets_;
}

Cone dual(const Cone& c) {
  return Cone(c.dim_, c.proper_facets(), c.equalities_, c.rays_, c.lineality_);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) {
    throw Error("cannot intersect cones of dimensions " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
  }
  std::vector<IntVector> fs = a.facets();
  fs.insert(fs.end(), b.facets().begin(), b.facets().end());
  return Cone::from_inequalities(a.dim(), fs);
}

Cone negate(const Cone& c) {
  std::vector<IntVector> rays, facets;
  for (const auto& r : c.rays_) {
    rays.push_back(negated(r));
  }
  for (const auto& f : c.proper_facets()) {
    facets.push_back(negated(f));
  }
  return Cone(c.dim_, rays, c.lineality_, facets, c.equalities_);
}

namespace {

IntVector padded(const IntVector& v, std::size_t before, std::size_t after) {
  IntVector out(before, Int(0));
  out.insert(out.end(), v.begin(), v.end());
  out.resize(before + v.size() + after, Int(0));
  return out;
}

std::vector<IntVector> padded_all(const std::vector<IntVector>& vs, std::size_t before,
                                  std::size_t after) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    out.push_back(padded(v, before, after));
  }
  return out;
}

}  // namespace

Cone product_with_trivial_factor(const Cone& c, std::size_t k) {
  const std::size_t d = c.dim_;
  auto lin = padded_all(c.lineality_, 0, k);
  for (std::size_t i = 0; i < k; ++i) {
    lin.push_back(unit_vector(d + k, d + i));
  }
  return Cone(d + k, padded_all(c.rays_, 0, k), lin, padded_all(c.proper_facets(), 0, k),
              padded_all(c.equalities_, 0, k));
}

Cone product_cone(const Cone& a, const Cone& b) {
  const std::size_t p = a.dim_;
  const std::size_t q = b.dim_;
  auto join = [&](const std::vector<IntVector>& x, const std::vector<IntVector>& y) {
    auto out = padded_all(x, 0, q);
    auto tail = padded_all(y, p, 0);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  };
  return Cone(p + q, join(a.rays_, b.rays_), join(a.lineality_, b.lineality_),
              join(a.proper_facets(), b.proper_facets()), join(a.equalities_, b.equalities_));
}

Cone pullback(const RatMatrix& map, const Cone& c) {
  if (map.rows() != c.dim()) {
    throw Error("pullback: map has " + std::to_string(map.rows()) + " rows, cone has dimension " +
                std::to_string(c.dim()));
  }
  std::vector<RatVector> fs;
  for (const auto& f : c.facets()) {
    fs.push_back(map.apply_left(to_rat(f)));
  }
  return Cone::from_inequalities(map.cols(), fs);
}

Cone image(const RatMatrix& map, const Cone& c) {
  if (map.cols() != c.dim()) {
    throw Error("image: map has " + std::to_string(map.cols()) + " columns, cone has dimension " +
                std::to_string(c.dim()));
  }
  std::vector<RatVector> gs;
  for (const auto& g : c.generators()) {
    gs.push_back(map.apply(to_rat(g)));
  }
  return Cone::from_generators(map.rows(), gs);
}

Membership contains(const Cone& c, const RatVector& x) {
  if (x.size() != c.dim()) {
    throw Error("point of dimension " + std::to_string(x.size()) + " tested against a cone of dimension " +
                std::to_string(c.dim()));
  }
  bool strict = true;
  for (const auto& f : c.facets()) {
    const int s = sgn(dot(f, x));
    if (s < 0) {
      return Membership::Outside;
    }
    if (s == 0) {
      strict = false;
    }
  }
  return (strict && c.is_full_dimensional()) ? Membership::Interior : Membership::Boundary;
}

Membership contains(const Cone& c, const IntVector& x) { return contains(c, to_rat(x)); }

bool in_closure(const Cone& c, const RatVector& x) { return contains(c, x) != Membership::Outside; }

bool interiors_disjoint(const Cone& a, const Cone& b) {
  if (!a.is_full_dimensional() || !b.is_full_dimensional()) {
    throw Error("interior undefined");
  }
  return !intersect(a, b).is_full_dimensional();
}

std::optional<IntVector> integer_interior_point(const Cone& c) {
  if (!c.is_full_dimensional()) {
    return std::nullopt;
  }
  IntVector sum(c.dim(), Int(0));
  for (const auto& g : c.rays()) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += g[i];
    }
  }
  for (const auto& g : c.lineality()) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += g[i];
    }
  }
  IntVector p = primitive(sum);
  if (contains(c, p) != Membership::Interior) {
    throw Error("interior witness failed certification");
  }
  return p;
}

std::string describe(const Cone& c) {
  std::ostringstream os;
  os << "Cone(dim=" << c.dim() << ", rays=[";
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    os << (i ? ", " : "") << to_string(c.rays()[i]);
  }
  os << "], lineality=[";
  for (std::size_t i = 0; i < c.lineality().size(); ++i) {
    os << (i ? ", " : "") << to_string(c.lineality()[i]);
  }
  os << "], facets=[";
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    os << (i ? ", " : "") << to_string(c.facets()[i]);
  }
  os << "])";
  return os.str();
}

}  // namespace folcone
