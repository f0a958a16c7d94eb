#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

using State = std::size_t;

struct Transition {
  State from = 0;
  State to = 0;
  auto operator<=>(const Transition&) const = default;
};

/// A subshift of finite type given by a 0/1 incidence matrix, with optional
/// per-transition homology weights. States are 0-based internally; labels
/// default to "1".."n".
class MarkovSystem {
 public:
  MarkovSystem(std::vector<std::vector<int>> incidence, std::size_t homology_dim = 0,
               std::map<Transition, IntVector> weights = {},
               std::vector<std::string> state_labels = {});

  std::size_t size() const { return incidence_.size(); }
  std::size_t homology_dim() const { return homology_dim_; }
  bool allowed(State from, State to) const;
  const std::vector<State>& successors(State s) const { return successors_.at(s); }

  bool has_weights() const { return !weights_.empty(); }
  /// Weight of an allowed transition; allowed transitions missing from the
  /// weight map count as zero.
  IntVector weight(State from, State to) const;
  const std::map<Transition, IntVector>& weights() const { return weights_; }

  const std::string& label(State s) const { return labels_.at(s); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

 private:
  std::vector<std::vector<int>> incidence_;
  std::vector<std::vector<State>> successors_;
  std::size_t homology_dim_;
  std::map<Transition, IntVector> weights_;
  std::vector<std::string> labels_;
};

/// A periodic state sequence stored in its lexicographically least rotation.
class CyclicWord {
 public:
  explicit CyclicWord(std::vector<State> states);

  const std::vector<State>& states() const { return states_; }
  std::size_t length() const { return states_.size(); }
  bool is_simple() const;

  /// Shorter words first, then lexicographic.
  friend bool operator<(const CyclicWord& a, const CyclicWord& b);
  friend bool operator==(const CyclicWord& a, const CyclicWord& b) = default;

 private:
  std::vector<State> states_;
};

/// Word rendered with state labels, e.g. "(1 3 4 2)".
std::string to_string(const CyclicWord& w, const MarkovSystem& sys);

struct LoopClass {
  std::string label;
  std::optional<CyclicWord> word;
  IntVector homology;
};

/// True iff every consecutive pair (no wraparound) is an allowed transition.
/// Throws Error on an out-of-range state.
bool is_allowed(const MarkovSystem& sys, std::span<const State> word);

/// True iff the cyclic closure of w is allowed.
bool is_allowed_cyclic(const MarkovSystem& sys, const CyclicWord& w);

/// Simple cycles of the transition digraph, canonical, sorted by (length, lex).
std::vector<CyclicWord> minimal_periods(const MarkovSystem& sys);

/// Sum of transition weights around w.
IntVector loop_class(const MarkovSystem& sys, const CyclicWord& w);

/// Peels an allowed cyclic word into simple cycles with multiplicities; the
/// edge multiset of the result equals that of w.
std::vector<std::pair<CyclicWord, std::size_t>> decompose_cycle(const MarkovSystem& sys,
                                                                 const CyclicWord& w);

/// Loop classes for every minimal period of a weighted system.
std::vector<LoopClass> enumerate_loop_classes(const MarkovSystem& sys);

/// Wraps user-supplied classes. Throws Error when dimensions disagree.
std::vector<LoopClass> explicit_loop_classes(
    const std::vector<std::pair<std::string, IntVector>>& classes);

/// Reads a period label such as "1212" or "2 3 4" as a cyclic word of sys,
/// reduced to its primitive period. Returns nullopt if the label does not
/// name states of sys.
std::optional<CyclicWord> parse_period(const MarkovSystem& sys, const std::string& label);

}  // namespace folcone
