#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "folcone/branched.hpp"
#include "oracles/fourier_motzkin.hpp"

using namespace folcone;
using namespace testing_helpers;

namespace {

IntVector apply_int(const std::vector<IntVector>& rows, const IntVector& x) {
  IntVector out;
  for (const auto& r : rows) {
    out.push_back(dot(r, x));
  }
  return out;
}

BranchedSurfaceData random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> m_dist(1, 6), d_dist(1, 4), eq_dist(0, 3);
  BranchedSurfaceData b;
  b.sectors = static_cast<std::size_t>(m_dist(rng));
  const auto d = static_cast<std::size_t>(d_dist(rng));
  for (int k = eq_dist(rng); k > 0; --k) {
    auto row = random_ivec(rng, b.sectors, -2, 2);
    if (!is_zero(row)) {
      b.equations.push_back(row);
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    b.loop_incidence.push_back(random_ivec(rng, b.sectors, -2, 2));
  }
  return b;
}

// Image of W under S, with W generated by the Fourier-Motzkin oracle.
std::vector<IntVector> oracle_image(const BranchedSurfaceData& b) {
  std::vector<IntVector> cons;
  for (std::size_t i = 0; i < b.sectors; ++i) {
    cons.push_back(unit_vector(b.sectors, i));
  }
  for (const auto& e : b.equations) {
    cons.push_back(e);
    cons.push_back(negated(e));
  }
  std::vector<IntVector> out;
  for (const auto& g : oracle::generators_of(b.sectors, cons)) {
    out.push_back(apply_int(b.loop_incidence, g));
  }
  return out;
}

}  // namespace

TEST_CASE("Oertel cones of small branch systems") {
  auto r = oertel_cone({1, {}, ivs({{1}})});
  CHECK(r.cone == Cone::from_generators(1, ivs({{1}})));
  CHECK(r.note == "positive measure exists");
  CHECK(r.positive_measure.has_value());

  r = oertel_cone({3, ivs({{1, 1, -1}}), ivs({{1, 0, 0}, {0, 1, 0}})});
  CHECK(r.cone == Cone::from_generators(2, ivs({{1, 0}, {0, 1}})));
  REQUIRE(r.positive_measure.has_value());
  CHECK(*r.positive_measure == iv({1, 1, 2}));
  CHECK(r.note == "positive measure exists");

  r = oertel_cone({2, ivs({{1, 0}}), ivs({{1, 0}, {0, 1}})});
  CHECK(r.cone == Cone::from_generators(2, ivs({{0, 1}})));
  CHECK_FALSE(r.positive_measure.has_value());
  CHECK(r.note == "no strictly positive measure");

  r = oertel_cone({2, ivs({{1, 1}}), ivs({{1, 0}})});
  CHECK(r.cone == Cone::zero(1));
  CHECK(r.note == "no positive measure");
}

TEST_CASE("branched data validation") {
  CHECK_THROWS_AS(validate(BranchedSurfaceData{2, ivs({{0, 0}}), ivs({{1, 0}})}), InputError);
  CHECK_THROWS_AS(validate(BranchedSurfaceData{2, ivs({{1, 0, 0}}), ivs({{1, 0}})}), InputError);
  CHECK_THROWS_AS(validate(BranchedSurfaceData{2, {}, ivs({{1}})}), InputError);
  CHECK_THROWS_AS(validate(BranchedSurfaceData{2, {}, {}}), InputError);
}

TEST_CASE("subcone checks") {
  const auto q = Cone::from_generators(2, ivs({{1, 0}, {0, 1}}));
  CHECK(check_subcone(q, Cone::from_inequalities(2, ivs({{1, 0}}))));
  CHECK_FALSE(check_subcone(q, negate(q)));
  const auto oertel = oertel_cone({3, ivs({{1, 1, -1}}), ivs({{1, 0, 0}, {0, 1, 0}})});
  CHECK(check_subcone(oertel.cone, foliation_cone(fixtures::pretzel222()).cone));
  CHECK_THROWS_AS(check_subcone(q, Cone::full_space(3)), Error);
}

TEST_CASE("Oertel rays are images of measures and match the oracle") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const auto b = random_system(rng);
    const auto r = oertel_cone(b);
    for (const auto& mu : r.measure_rays) {
      for (const auto& x : mu) {
        CHECK(x >= 0);
      }
      for (const auto& e : b.equations) {
        CHECK(dot(e, mu) == 0);
      }
    }
    if (r.positive_measure) {
      for (const auto& x : *r.positive_measure) {
        CHECK(x > 0);
      }
    }
    const auto img = oracle_image(b);
    const auto d = b.loop_incidence.size();
    for (const auto& g : r.cone.generators()) {
      CHECK(oracle::in_hull(d, img, g));
    }
    for (const auto& y : img) {
      CHECK(in_closure(r.cone, to_rat(y)));
    }
  }
}

TEST_CASE("adding an equation never enlarges the cone") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 150; ++trial) {
    auto b = random_system(rng);
    const auto before = oertel_cone(b).cone;
    b.equations.push_back(random_ivec(rng, b.sectors, -2, 2));
    if (is_zero(b.equations.back())) {
      continue;
    }
    CHECK(check_subcone(oertel_cone(b).cone, before));
    CHECK(check_subcone(before, before));
  }
}

TEST_CASE("subcone is transitive") {
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Cone> c;
    for (int k = 0; k < 3; ++k) {
      std::vector<IntVector> g;
      for (int j = 0; j < 3; ++j) {
        g.push_back(random_ivec(rng, 2, -2, 2));
      }
      c.push_back(Cone::from_generators(2, g));
    }
    if (check_subcone(c[0], c[1]) && check_subcone(c[1], c[2])) {
      ++checked;
      CHECK(check_subcone(c[0], c[2]));
    }
  }
  CHECK(checked > 10);
}
