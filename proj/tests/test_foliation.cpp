#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "folcone/ball.hpp"
#include "folcone/foliation.hpp"
#include "folcone/linalg.hpp"
#include "oracles/brute_force.hpp"

using namespace folcone;
using namespace testing_helpers;
using namespace fixtures;

namespace {

Cone gens2(std::initializer_list<std::initializer_list<long>> rows) { return Cone::from_generators(2, ivs(rows)); }

std::vector<std::string> base_labels(const FoliationCone& fc) {
  std::vector<std::string> out;
  for (const auto& r : fc.base) {
    out.push_back(r.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Cone> cone_set(const Fan& fan) {
  std::set<Cone> s;
  for (const auto& fc : fan.cones) {
    s.insert(fc.cone);
  }
  return s;
}

PLBall hexagon() {
  std::vector<RatVector> v;
  for (const auto& x : ivs({{1, 0}, {0, 1}, {-1, -1}})) {
    v.push_back(to_rat(x));
    v.push_back(to_rat(negated(x)));
  }
  return ball_from_vertices(2, v);
}

FoliationCone named(std::string name, Cone c) {
  FoliationCone fc{std::move(name), std::move(c), {}, {}, LabelSet::defaults(2)};
  return fc;
}

}  // namespace

TEST_CASE("foliation cones of the worked examples") {
  const auto c1 = foliation_cone(pretzel222());
  CHECK(c1.cone.facets() == ivs({{0, 1}, {1, 0}}));
  CHECK(c1.cone.rays() == ivs({{0, 1}, {1, 0}}));
  CHECK(base_labels(c1) == std::vector<std::string>{"e1", "e2"});
  CHECK(c1.generators_used.size() == 2);

  const auto c2 = foliation_cone(pretzel222_neg());
  CHECK(c2.cone.rays() == ivs({{-1, -1}, {1, 0}}));
  CHECK(base_labels(c2) == std::vector<std::string>{"e0", "e1"});

  const auto c4 = foliation_cone(link2());
  CHECK(c4.cone.facets() == ivs({{-1, 0, 1}, {-1, 1, 0}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(c4.cone.rays() == oracle::extreme_rays_by_subsets(3, c4.cone.facets()));
  CHECK(c4.cone.rays().size() == 4);

  const auto c5 = foliation_cone(pretzel242());
  CHECK(c5.cone.rays() == ivs({{-1, -1}, {0, 1}}));
  CHECK(base_labels(c5) == std::vector<std::string>{"e0", "e2"});
}

TEST_CASE("product presentation gives the full space") {
  const auto fc = foliation_cone(product(3));
  CHECK(fc.cone.is_full_space());
  CHECK(fc.generators_used.empty());
}

TEST_CASE("weighted and explicit classes agree") {
  CHECK(foliation_cone(pretzel222_weighted()).cone == foliation_cone(pretzel222()).cone);
  CHECK(foliation_cone(pretzel242_weighted()).cone == foliation_cone(pretzel242()).cone);
  CHECK(gather_loop_classes(pretzel242_weighted()).size() == 3);

  auto bad = pretzel222_weighted();
  bad.loop_classes = explicit_loop_classes({{"111", iv({0, 1})}});
  CHECK_THROWS_AS(gather_loop_classes(bad), InputError);
}

TEST_CASE("presentation validation") {
  auto p = pretzel222();
  p.symmetries = {mat({{1, 1}, {1, 1}})};
  CHECK_THROWS_AS(validate(p), InputError);
  p = pretzel222();
  p.dim = 3;
  CHECK_THROWS_AS(validate(p), InputError);
}

TEST_CASE("symmetry orbit and fan assembly") {
  const auto fan = fan222();
  REQUIRE(fan.cones.size() == 3);
  CHECK(fan.disjointness_verified);
  const std::set<Cone> expected{gens2({{1, 0}, {0, 1}}), gens2({{0, 1}, {-1, -1}}), gens2({{-1, -1}, {1, 0}})};
  CHECK(cone_set(fan) == expected);

  // The generating symmetry maps the fan to itself.
  const auto m = mat({{0, -1}, {1, -1}});
  std::set<Cone> moved;
  for (const auto& fc : fan.cones) {
    moved.insert(image(m, fc.cone));
  }
  CHECK(moved == expected);

  const auto pair = assemble_fan({foliation_cone(pretzel222_neg()), foliation_cone(pretzel222())});
  CHECK(pair.disjointness_verified);
}

TEST_CASE("overlapping cones are rejected with a witness") {
  const auto fc = foliation_cone(pretzel222());
  try {
    assemble_fan({fc, named("half", Cone::from_inequalities(2, ivs({{1, -1}})))});
    FAIL("expected overlap");
  } catch (const OverlapError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
    CHECK(contains(fc.cone, e.witness()) == Membership::Interior);
    CHECK(contains(Cone::from_inequalities(2, ivs({{1, -1}})), e.witness()) == Membership::Interior);
  }
  CHECK_THROWS_AS(assemble_fan({fc, fc}), OverlapError);
  CHECK_THROWS_AS(assemble_fan({}), Error);
  CHECK_THROWS_AS(assemble_fan({named("ray", gens2({{1, 0}}))}), Error);
}

TEST_CASE("orientation reversal") {
  auto fan = fan222();
  std::vector<FoliationCone> reversed;
  for (const auto& fc : fan.cones) {
    reversed.push_back(named(fc.name + "*", negate(fc.cone)));
  }
  const auto rfan = assemble_fan(reversed);
  CHECK(rfan.disjointness_verified);
  CHECK(contains(rfan.cones[0].cone, iv({-1, -1})) == Membership::Interior);
}

TEST_CASE("face cones of the hexagon fan") {
  const auto faces = thurston_face_cones(fan222());
  std::set<Cone> got;
  for (const auto& f : faces) {
    got.insert(f.cone);
  }
  const std::set<Cone> edges{gens2({{1, 0}, {1, 1}}),  gens2({{1, 1}, {0, 1}}),   gens2({{0, 1}, {-1, 0}}),
                             gens2({{-1, 0}, {-1, -1}}), gens2({{-1, -1}, {0, -1}}), gens2({{0, -1}, {1, 0}})};
  CHECK(faces.size() == 6);
  CHECK(got == edges);

  const auto hex = hexagon();
  std::set<Cone> ball_faces;
  for (std::size_t i = 0; i < hex.facets().size(); ++i) {
    ball_faces.insert(hex.face_cone(i));
  }
  CHECK(ball_faces == edges);

  Fan whole{2, {named("product", Cone::full_space(2))}, true};
  const auto wf = thurston_face_cones(whole);
  REQUIRE(wf.size() == 1);
  CHECK(wf[0].cone.is_full_space());
}

TEST_CASE("ball of the two-component link") {
  // Vertices as read from the figure: ±e1, ±e2, ±e3, ±e0, ±(e2+e3).
  std::vector<RatVector> v;
  for (const auto& x : ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {0, 1, 1}})) {
    v.push_back(to_rat(x));
    v.push_back(to_rat(negated(x)));
  }
  const auto ball = ball_from_vertices(3, v);
  CHECK(ball.vertices().size() == 10);
  CHECK(ball.facets().size() == 12);
  const auto quads = std::count_if(ball.facets().begin(), ball.facets().end(),
                                   [](const BallFacet& f) { return f.vertices.size() == 4; });
  CHECK(quads == 4);
}

TEST_CASE("ball cross-check") {
  const auto fan = fan222();
  const auto good = ball_crosscheck(fan, hexagon());
  CHECK(good.ok());
  CHECK(good.faces.size() == 6);
  CHECK(good.unmatched_face_cones.empty());

  std::vector<RatVector> sq;
  for (const auto& x : ivs({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})) {
    sq.push_back(to_rat(x));
  }
  const auto bad = ball_crosscheck(fan, ball_from_vertices(2, sq));
  CHECK_FALSE(bad.ok());

  // Pretzel (2,4,2): the cone [e0,e2], the half-plane through e0 and -e2,
  // and [-e0,e2]; the ball is the parallelogram ±e0, ±e2.
  const auto c5 = foliation_cone(pretzel242());
  const auto half = named("half", Cone::from_generators(2, ivs({{-1, -1}, {1, 1}, {0, -1}})));
  const auto third = named("third", gens2({{1, 1}, {0, 1}}));
  const auto fan5 = assemble_fan({c5, half, third});
  std::vector<RatVector> par;
  for (const auto& x : ivs({{-1, -1}, {1, 1}, {0, 1}, {0, -1}})) {
    par.push_back(to_rat(x));
  }
  const auto r5 = ball_crosscheck(fan5, ball_from_vertices(2, par));
  CHECK(r5.ok());
  CHECK(r5.face_cones.size() == 4);
}

TEST_CASE("locating classes") {
  const auto fan = fan222();
  auto loc = locate_class(fan, iv({1, 1}));
  CHECK(loc.proper);
  REQUIRE(loc.containing.size() == 1);
  CHECK(loc.containing[0].membership == Membership::Interior);

  loc = locate_class(fan, iv({1, 0}));
  CHECK_FALSE(loc.proper);
  CHECK(loc.containing.size() == 2);

  loc = locate_class(fan, iv({-1, -1}));
  CHECK_FALSE(loc.proper);
  REQUIRE(loc.containing.size() == 2);
  for (const auto& h : loc.containing) {
    CHECK(h.membership == Membership::Boundary);
  }

  CHECK_FALSE(locate_class(fan, iv({0, 0})).proper);
  Fan whole{2, {named("product", Cone::full_space(2))}, true};
  CHECK(locate_class(whole, iv({0, 0})).proper);
  CHECK(locate_class(whole, iv({3, -7})).proper);
}

TEST_CASE("Mayer-Vietoris assembly") {
  const auto q = gens2({{1, 0}, {0, 1}});
  // Identity into both factors of a product.
  const auto id4 = RatMatrix::identity(4);
  CHECK(mv_split_assembly(id4, q, q) == product_cone(q, q));
  // Both sides products: every class is foliated.
  CHECK(mv_split_assembly(mat({{1, 0}, {0, 1}, {1, 1}, {0, 1}}), Cone::full_space(2), Cone::full_space(2))
            .is_full_space());
  // i(x) = (x, x1 + x2, x2): preimage of quadrant x quadrant is the quadrant.
  CHECK(mv_split_assembly(mat({{1, 0}, {0, 1}, {1, 1}, {0, 1}}), q, q) == q);
  CHECK_THROWS_AS(mv_split_assembly(mat({{1, 0}, {0, 1}}), q, q), Error);
}

TEST_CASE("disk decomposition transfer") {
  const auto fan = fan222();
  const auto proj = mat({{1, 0, 0}, {0, 1, 0}});
  const auto lifted = disk_decomposition_transfer(proj, fan);
  REQUIRE(lifted.cones.size() == 3);
  CHECK(lifted.disjointness_verified);
  for (const auto& fc : lifted.cones) {
    CHECK(fc.cone.lineality() == ivs({{0, 0, 1}}));
  }

  const auto same = disk_decomposition_transfer(RatMatrix::identity(2), fan);
  CHECK(cone_set(same) == cone_set(fan));

  // Transfer along a projection is crossing with a line; projecting the
  // line away recovers the fan.
  std::set<Cone> crossed, projected;
  for (const auto& fc : fan.cones) {
    crossed.insert(product_with_trivial_factor(fc.cone, 1));
  }
  for (const auto& fc : lifted.cones) {
    projected.insert(image(proj, fc.cone));
  }
  CHECK(cone_set(lifted) == crossed);
  CHECK(projected == cone_set(fan));

  CHECK_THROWS_AS(disk_decomposition_transfer(mat({{1, 0, 0, 0}, {0, 1, 0, 0}}), fan), Error);
  CHECK_THROWS_AS(disk_decomposition_transfer(mat({{1, 0}, {0, 1}, {1, 1}}), fan), Error);
}
