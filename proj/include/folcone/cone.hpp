#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

enum class Membership { Interior, Boundary, Outside };

std::string to_string(Membership m);

/// A closed polyhedral cone in Q^d held in both descriptions.
///
/// Canonical form, so that operator== is structural:
///  - lineality: primitive rows of the rref of the lineality space;
///  - rays: extreme rays projected onto the orthogonal complement of the
///    lineality space, primitive, sorted;
///  - equalities: primitive rows of the rref of the annihilator of span(cone);
///  - facets: proper facet normals projected onto span(cone), primitive, plus
///    the pair +g, -g for every equality g; sorted.
/// The cone is {x : <f, x> >= 0 for every facet f}.
class Cone {
 public:
  /// Nonnegative hull of `generators` (empty list: the zero cone).
  static Cone from_generators(std::size_t dim, const std::vector<IntVector>& generators);
  static Cone from_generators(std::size_t dim, const std::vector<RatVector>& generators);
  /// {x : <f, x> >= 0} (empty list: the whole space).
  static Cone from_inequalities(std::size_t dim, const std::vector<IntVector>& functionals);
  static Cone from_inequalities(std::size_t dim, const std::vector<RatVector>& functionals);
  static Cone full_space(std::size_t dim);
  static Cone zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equalities() const { return equalities_; }
  /// Facets that are not one of the paired equality functionals.
  std::vector<IntVector> proper_facets() const;
  /// Rays together with +l and -l for every lineality vector.
  std::vector<IntVector> generators() const;

  /// Dimension of the linear span of the cone.
  std::size_t span_dim() const { return dim_ - equalities_.size(); }
  bool is_full_dimensional() const { return equalities_.empty(); }
  bool is_full_space() const { return lineality_.size() == dim_; }
  bool is_pointed() const { return lineality_.empty(); }

  friend bool operator==(const Cone& a, const Cone& b);
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  Cone(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality,
       std::vector<IntVector> proper_facets, std::vector<IntVector> equalities);

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equalities_;

  friend Cone dual(const Cone& c);
  friend Cone negate(const Cone& c);
  friend Cone product_with_trivial_factor(const Cone& c, std::size_t k);
  friend Cone product_cone(const Cone& a, const Cone& b);
};

/// {f : <f, x> >= 0 for all x in c}.
Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone negate(const Cone& c);
/// c x Q^k.
Cone product_with_trivial_factor(const Cone& c, std::size_t k);
/// {x in Q^e : L x in c} for L with d rows and e columns.
Cone pullback(const RatMatrix& map, const Cone& c);
/// Image {L x : x in c}.
Cone image(const RatMatrix& map, const Cone& c);
Cone product_cone(const Cone& a, const Cone& b);

/// Interior means topological interior in the ambient space.
Membership contains(const Cone& c, const RatVector& x);
Membership contains(const Cone& c, const IntVector& x);
bool in_closure(const Cone& c, const RatVector& x);

/// Whether two full-dimensional cones have disjoint interiors. Throws Error
/// ("interior undefined") if either is not full-dimensional.
bool interiors_disjoint(const Cone& a, const Cone& b);

/// Primitive of the sum of rays and lineality basis when c is
/// full-dimensional; the result is certified to be interior.
std::optional<IntVector> integer_interior_point(const Cone& c);

std::string describe(const Cone& c);

}  // namespace folcone
