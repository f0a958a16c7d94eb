#pragma once
// The worked examples as in-memory presentations.

#include "folcone/foliation.hpp"
#include "helpers.hpp"

namespace fixtures {

using namespace folcone;
using testing_helpers::iv;
using testing_helpers::mat;

inline LabelSet labels_with_e0(std::size_t dim) {
  LabelSet l = LabelSet::defaults(dim);
  l.derived.push_back({"e0", IntVector(dim, Int(-1))});
  return l;
}

inline SuturedPresentation explicit_presentation(std::string name, std::size_t dim,
                                                 std::vector<std::pair<std::string, IntVector>> classes) {
  SuturedPresentation p;
  p.name = std::move(name);
  p.dim = dim;
  p.labels = labels_with_e0(dim);
  p.loop_classes = explicit_loop_classes(classes);
  return p;
}

/// (2,2,2) pretzel, disks +D1,+D2, with the cyclic symmetry e1 -> e2 -> e0.
inline SuturedPresentation pretzel222() {
  auto p = explicit_presentation("pretzel222 +D1+D2", 2, {{"111", iv({1, 0})}, {"222", iv({0, 1})}});
  p.markov = MarkovSystem({{1, 1}, {1, 1}});
  p.symmetries.push_back(mat({{0, -1}, {1, -1}}));
  return p;
}

/// Same data with per-transition weights realising the listed classes.
inline SuturedPresentation pretzel222_weighted() {
  auto p = pretzel222();
  std::map<Transition, IntVector> w{{{0, 0}, iv({1, 0})},
                                    {{1, 1}, iv({0, 1})},
                                    {{0, 1}, iv({1, 0})},
                                    {{1, 0}, iv({0, 1})}};
  p.markov = MarkovSystem({{1, 1}, {1, 1}}, 2, w);
  return p;
}

inline SuturedPresentation pretzel222_neg() {
  auto p = explicit_presentation("pretzel222 +D1-D2", 2, {{"1212", iv({1, -1})}, {"2222", iv({0, -1})}});
  p.markov = MarkovSystem({{0, 1}, {1, 1}});
  return p;
}

inline SuturedPresentation link2() {
  auto p = explicit_presentation("link -D1+D2+D3", 3,
                                 {{"1212", iv({-1, 1, 0})},
                                  {"2222", iv({0, 1, 0})},
                                  {"1313", iv({-1, 0, 1})},
                                  {"3333", iv({0, 0, 1})}});
  p.markov = MarkovSystem({{0, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  return p;
}

inline const std::vector<std::vector<int>>& hex_incidence() {
  static const std::vector<std::vector<int>> a = {{0, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}};
  return a;
}

inline SuturedPresentation pretzel242() {
  auto p = explicit_presentation("pretzel242 +D0-D1", 2, {{"234", iv({-1, 1})}, {"13", iv({-1, 0})}});
  p.markov = MarkovSystem(hex_incidence());
  return p;
}

/// (2,4,2) pretzel with transition weights: 1->3 carries -α2, 3->1, 2->3 and 2->1
/// carry α2-α1, the rest zero. (1 3 4 2) then gets the redundant class -α1.
inline SuturedPresentation pretzel242_weighted() {
  auto p = pretzel242();
  std::map<Transition, IntVector> w{{{0, 2}, iv({0, -1})},
                                    {{2, 0}, iv({-1, 1})},
                                    {{1, 2}, iv({-1, 1})},
                                    {{1, 0}, iv({-1, 1})}};
  p.markov = MarkovSystem(hex_incidence(), 2, w);
  return p;
}

inline SuturedPresentation product(std::size_t dim) {
  SuturedPresentation p;
  p.name = "product";
  p.dim = dim;
  p.labels = LabelSet::defaults(dim);
  p.product = true;
  return p;
}

inline Fan fan222() {
  const auto p = pretzel222();
  return assemble_fan(symmetry_orbit(p, foliation_cone(p)));
}

}  // namespace fixtures
