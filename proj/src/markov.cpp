#include "folcone/markov.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "folcone/error.hpp"

namespace folcone {

MarkovSystem::MarkovSystem(std::vector<std::vector<int>> incidence, std::size_t homology_dim,
                           std::map<Transition, IntVector> weights,
                           std::vector<std::string> state_labels)
    : incidence_(std::move(incidence)),
      homology_dim_(homology_dim),
      weights_(std::move(weights)),
      labels_(std::move(state_labels)) {
  const std::size_t n = incidence_.size();
  successors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (incidence_[i].size() != n) {
      throw Error("incidence matrix must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int a = incidence_[i][j];
      if (a != 0 && a != 1) {
        throw Error("incidence must be 0/1");
      }
      if (a == 1) {
        successors_[i].push_back(j);
      }
    }
  }
  for (const auto& [t, w] : weights_) {
    if (t.from >= n || t.to >= n || incidence_[t.from][t.to] != 1) {
      throw Error("weight given for a transition that is not allowed");
    }
    if (w.size() != homology_dim_) {
      throw Error("weight vector has length " + std::to_string(w.size()) + ", expected " +
                  std::to_string(homology_dim_));
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      labels_.push_back(std::to_string(i + 1));
    }
  } else if (labels_.size() != n) {
    throw Error("state label count does not match incidence size");
  }
}

bool MarkovSystem::allowed(State from, State to) const {
  if (from >= size() || to >= size()) {
    throw Error("state index out of range");
  }
  return incidence_[from][to] == 1;
}

IntVector MarkovSystem::weight(State from, State to) const {
  if (!allowed(from, to)) {
    throw Error("transition is not allowed");
  }
  auto it = weights_.find({from, to});
  if (it == weights_.end()) {
    return IntVector(homology_dim_, Int(0));
  }
  return it->second;
}

namespace {

std::vector<State> least_rotation(const std::vector<State>& s) {
  std::vector<State> best = s;
  std::vector<State> candidate(s.size());
  for (std::size_t shift = 1; shift < s.size(); ++shift) {
    std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift), s.end(),
                     candidate.begin());
    if (candidate < best) {
      best = candidate;
    }
  }
  return best;
}

}  // namespace

CyclicWord::CyclicWord(std::vector<State> states) : states_(least_rotation(states)) {
  if (states_.empty()) {
    throw Error("cyclic word must be nonempty");
  }
}

bool CyclicWord::is_simple() const {
  std::set<State> seen(states_.begin(), states_.end());
  return seen.size() == states_.size();
}

bool operator<(const CyclicWord& a, const CyclicWord& b) {
  if (a.length() != b.length()) {
    return a.length() < b.length();
  }
  return a.states_ < b.states_;
}

std::string to_string(const CyclicWord& w, const MarkovSystem& sys) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    os << sys.label(w.states()[i]);
  }
  os << ')';
  return os.str();
}

bool is_allowed(const MarkovSystem& sys, std::span<const State> word) {
  for (auto s : word) {
    if (s >= sys.size()) {
      throw Error("state index out of range");
    }
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (!sys.allowed(word[i], word[i + 1])) {
      return false;
    }
  }
  return true;
}

bool is_allowed_cyclic(const MarkovSystem& sys, const CyclicWord& w) {
  const auto& s = w.states();
  return is_allowed(sys, s) && sys.allowed(s.back(), s.front());
}

namespace {

// Tarjan strongly connected components of the subgraph induced on states >= lo.
std::vector<std::vector<State>> components_from(const MarkovSystem& sys, State lo) {
  const std::size_t n = sys.size();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::vector<std::vector<State>> comps;
  int counter = 0;

  std::function<void(State)> strongconnect = [&](State v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (State w : sys.successors(v)) {
      if (w < lo) {
        continue;
      }
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<State> comp;
      State w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (State v = lo; v < n; ++v) {
    if (index[v] < 0) {
      strongconnect(v);
    }
  }
  return comps;
}

// Johnson's circuit search rooted at `start` inside one strong component.
class CircuitSearch {
 public:
  CircuitSearch(const MarkovSystem& sys, const std::vector<State>& component, State start,
                std::vector<CyclicWord>& out)
      : sys_(sys), in_comp_(sys.size(), false), blocked_(sys.size(), false),
        blocked_by_(sys.size()), start_(start), out_(out) {
    for (auto v : component) {
      in_comp_[v] = true;
    }
  }

  bool circuit(State v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (State w : sys_.successors(v)) {
      if (!in_comp_[w]) {
        continue;
      }
      if (w == start_) {
        out_.emplace_back(path_);
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (State w : sys_.successors(v)) {
        if (in_comp_[w]) {
          blocked_by_[w].insert(v);
        }
      }
    }
    path_.pop_back();
    return found;
  }

 private:
  void unblock(State u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (State w : pending) {
      if (blocked_[w]) {
        unblock(w);
      }
    }
  }

  const MarkovSystem& sys_;
  std::vector<bool> in_comp_;
  std::vector<bool> blocked_;
  std::vector<std::set<State>> blocked_by_;
  std::vector<State> path_;
  State start_;
  std::vector<CyclicWord>& out_;
};

}  // namespace

std::vector<CyclicWord> minimal_periods(const MarkovSystem& sys) {
  std::vector<CyclicWord> cycles;
  const std::size_t n = sys.size();
  State s = 0;
  while (s < n) {
    // Least state that lies on a cycle in the subgraph of states >= s.
    std::optional<State> root;
    std::vector<State> root_comp;
    for (auto& comp : components_from(sys, s)) {
      const State least = comp.front();
      const bool cyclic = comp.size() > 1 || sys.allowed(least, least);
      if (cyclic && (!root || least < *root)) {
        root = least;
        root_comp = comp;
      }
    }
    if (!root) {
      break;
    }
    CircuitSearch(sys, root_comp, *root, cycles).circuit(*root);
    s = *root + 1;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

IntVector loop_class(const MarkovSystem& sys, const CyclicWord& w) {
  if (!sys.has_weights()) {
    throw Error("system has no transition weights");
  }
  if (!is_allowed_cyclic(sys, w)) {
    throw Error("word is not an allowed cycle");
  }
  IntVector sum(sys.homology_dim(), Int(0));
  const auto& s = w.states();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto wt = sys.weight(s[i], s[(i + 1) % s.size()]);
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] += wt[k];
    }
  }
  return sum;
}

std::vector<std::pair<CyclicWord, std::size_t>> decompose_cycle(const MarkovSystem& sys,
                                                                 const CyclicWord& w) {
  if (!is_allowed_cyclic(sys, w)) {
    throw Error("word is not an allowed cycle");
  }
  std::map<CyclicWord, std::size_t> counts;
  std::vector<State> path;
  std::vector<int> position(sys.size(), -1);
  const auto& s = w.states();
  auto visit = [&](State v) {
    if (position[v] >= 0) {
      const auto at = static_cast<std::size_t>(position[v]);
      std::vector<State> loop(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
      for (std::size_t i = at + 1; i < path.size(); ++i) {
        position[path[i]] = -1;
      }
      path.resize(at + 1);
      ++counts[CyclicWord(std::move(loop))];
    } else {
      position[v] = static_cast<int>(path.size());
      path.push_back(v);
    }
  };
  for (State v : s) {
    visit(v);
  }
  // Closing edge back to the first state finishes the last loop.
  visit(s.front());
  return {counts.begin(), counts.end()};
}

std::vector<LoopClass> enumerate_loop_classes(const MarkovSystem& sys) {
  std::vector<LoopClass> out;
  for (auto& w : minimal_periods(sys)) {
    auto h = loop_class(sys, w);
    out.push_back({to_string(w, sys), w, std::move(h)});
  }
  return out;
}

std::vector<LoopClass> explicit_loop_classes(
    const std::vector<std::pair<std::string, IntVector>>& classes) {
  std::vector<LoopClass> out;
  for (const auto& [label, v] : classes) {
    if (!out.empty() && v.size() != out.front().homology.size()) {
      throw Error("loop class \"" + label + "\" has dimension " + std::to_string(v.size()) +
                  ", expected " + std::to_string(out.front().homology.size()));
    }
    out.push_back({label, std::nullopt, v});
  }
  return out;
}

std::optional<CyclicWord> parse_period(const MarkovSystem& sys, const std::string& label) {
  std::vector<std::string> tokens;
  if (label.find(' ') != std::string::npos) {
    std::istringstream is(label);
    for (std::string t; is >> t;) {
      tokens.push_back(t);
    }
  } else {
    const bool single_chars = std::all_of(sys.labels().begin(), sys.labels().end(),
                                          [](const std::string& l) { return l.size() == 1; });
    if (!single_chars) {
      return std::nullopt;
    }
    for (char c : label) {
      tokens.emplace_back(1, c);
    }
  }
  std::vector<State> states;
  for (const auto& t : tokens) {
    auto it = std::find(sys.labels().begin(), sys.labels().end(), t);
    if (it == sys.labels().end()) {
      return std::nullopt;
    }
    states.push_back(static_cast<State>(it - sys.labels().begin()));
  }
  if (states.empty()) {
    return std::nullopt;
  }
  const std::size_t len = states.size();
  for (std::size_t p = 1; p <= len; ++p) {
    if (len % p != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i) {
      periodic = states[i] == states[i - p];
    }
    if (periodic) {
      states.resize(p);
      break;
    }
  }
  return CyclicWord(std::move(states));
}

}  // namespace folcone
