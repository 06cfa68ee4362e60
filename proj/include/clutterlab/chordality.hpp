#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/integer.hpp"

namespace clutterlab {

struct SimplicialStep {
  VertexSet element;
  int neighbors = 0;  // |N(e_i)| in the clutter left by the earlier steps

  friend bool operator==(const SimplicialStep&, const SimplicialStep&) = default;
};

struct SimplicialOrder {
  std::vector<SimplicialStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const SimplicialOrder&, const SimplicialOrder&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) out += ",";
      out += "(" + steps[i].element.to_string() + "," + std::to_string(steps[i].neighbors) + ")";
    }
    return out;
  }
};

/// Multiset of positive integers stored as value -> multiplicity.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<int> values) {
    for (int v : values) add(v);
  }

  void add(int value, std::size_t count = 1) {
    if (count == 0) return;
    counts_[value] += count;
  }

  const std::map<int, std::size_t>& counts() const { return counts_; }
  std::size_t count(int value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
  }
  bool empty() const { return counts_.empty(); }
  int max() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  /// Values in non-increasing order, each repeated by multiplicity.
  std::vector<int> values() const {
    std::vector<int> out;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) out.insert(out.end(), it->second, it->first);
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<int, std::size_t> counts_;
};

/**
 * lambda_1, lambda_2, ... with trailing zeros trimmed. Entry i (1-based) is the
 * multiplicity of i in the simplicial multiset. The ambient (n, d) is kept so
 * that the Macaulay-side conversions know their index ranges.
 */
class LambdaSequence {
 public:
  LambdaSequence() = default;
  LambdaSequence(int n, int d, std::vector<Integer> values) : n_(n), d_(d), values_(std::move(values)) { trim(); }
  LambdaSequence(int n, int d, std::initializer_list<long long> values) : n_(n), d_(d) {
    for (long long v : values) values_.emplace_back(v);
    trim();
  }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Integer>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }

  /// lambda_i for i >= 1; zero past the stored length.
  Integer operator[](std::size_t i) const { return (i >= 1 && i <= values_.size()) ? values_[i - 1] : Integer(0); }

  Integer sum() const {
    Integer s = 0;
    for (const auto& v : values_) s += v;
    return s;
  }

  /// sum_i i * lambda_i, which is the number of circuits for a chordal clutter.
  Integer weighted_sum() const {
    Integer s = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * (i + 1);
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + values_[i].str();
    return out + ")";
  }

  friend bool operator==(const LambdaSequence&, const LambdaSequence&) = default;

 private:
  void trim() {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
  }

  int n_ = 0;
  int d_ = 0;
  std::vector<Integer> values_;
};

inline bool is_simplicial(const Clutter& c, VertexSet e) {
  const VertexSet open = open_neighborhood(c, e);
  return !open.empty() && is_clique(c, e | open);
}

/// Simp(C), sorted lexicographically.
inline std::vector<VertexSet> simplicial_elements(const Clutter& c) {
  std::vector<VertexSet> out;
  for (VertexSet e : submaximal_circuits(c)) {
    if (is_simplicial(c, e)) out.push_back(e);
  }
  return out;
}

/// Replays an order against c; returns a diagnosis on failure, nullopt when valid.
inline std::optional<std::string> verify_order(const Clutter& c, const SimplicialOrder& order) {
  Clutter current = c;
  for (std::size_t i = 0; i < order.steps.size(); ++i) {
    const auto& step = order.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (" + step.element.to_string() + ")";
    if (step.element.size() != c.d() - 1) return where + ": not a (d-1)-set";
    if (!is_simplicial(current, step.element)) return where + ": not simplicial";
    const int neighbors = open_neighborhood(current, step.element).size();
    if (neighbors != step.neighbors) {
      return where + ": recorded " + std::to_string(step.neighbors) + " neighbors, replay gives " + std::to_string(neighbors);
    }
    current = deletion(current, step.element);
  }
  if (!current.empty()) return "order leaves " + std::to_string(current.size()) + " circuits";
  return std::nullopt;
}

enum class Chordality { chordal, not_chordal, inconclusive };

inline const char* to_string(Chordality c) {
  switch (c) {
    case Chordality::chordal: return "chordal";
    case Chordality::not_chordal: return "not chordal";
    case Chordality::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchOptions {
  std::size_t node_limit = 0;  // 0 = unlimited
};

struct SearchResult {
  Chordality status = Chordality::not_chordal;
  std::optional<SimplicialOrder> order;
  std::size_t nodes = 0;
};

namespace detail {

class OrderSearch {
 public:
  explicit OrderSearch(const SearchOptions& options) : options_(options) {}

  SearchResult run(const Clutter& c) {
    SearchResult result;
    std::vector<SimplicialStep> path;
    const Outcome outcome = visit(c, path);
    result.nodes = nodes_;
    if (outcome == Outcome::found) {
      result.status = Chordality::chordal;
      result.order = SimplicialOrder{std::move(path)};
    } else {
      result.status = outcome == Outcome::cutoff ? Chordality::inconclusive : Chordality::not_chordal;
    }
    return result;
  }

 private:
  enum class Outcome { found, failed, cutoff };

  Outcome visit(const Clutter& c, std::vector<SimplicialStep>& path) {
    if (c.empty()) return Outcome::found;
    if (failed_.contains(c)) return Outcome::failed;
    if (options_.node_limit != 0 && nodes_ >= options_.node_limit) return Outcome::cutoff;
    ++nodes_;
    bool cut = false;
    for (VertexSet e : simplicial_elements(c)) {
      path.push_back({e, open_neighborhood(c, e).size()});
      const Outcome child = visit(deletion(c, e), path);
      if (child == Outcome::found) return child;
      path.pop_back();
      if (child == Outcome::cutoff) cut = true;
    }
    // A cut-off subtree proves nothing, so only exhaustive failures are memoized.
    if (cut) return Outcome::cutoff;
    failed_.insert(c);
    return Outcome::failed;
  }

  SearchOptions options_;
  std::size_t nodes_ = 0;
  std::unordered_set<Clutter, ClutterHash> failed_;
};

}  // namespace detail

/**
 * Decides chordality by depth-first search over simplicial deletions, trying
 * candidates in lexicographic order and memoizing clutters already shown to be
 * dead ends. The witness is therefore the lexicographically first order.
 */
inline SearchResult find_simplicial_order(const Clutter& c, const SearchOptions& options = {}) {
  return detail::OrderSearch(options).run(c);
}

/// Always deletes the lexicographically smallest simplicial element. Failure proves nothing.
inline std::optional<SimplicialOrder> greedy_simplicial_order(const Clutter& c) {
  SimplicialOrder order;
  Clutter current = c;
  while (!current.empty()) {
    const auto candidates = simplicial_elements(current);
    if (candidates.empty()) return std::nullopt;
    const VertexSet e = candidates.front();
    order.steps.push_back({e, open_neighborhood(current, e).size()});
    current = deletion(current, e);
  }
  return order;
}

inline Multiset simplicial_multiset(const SimplicialOrder& order) {
  Multiset m;
  for (const auto& step : order.steps) m.add(step.neighbors);
  return m;
}

inline LambdaSequence lambda_sequence(const Multiset& multiset, int n, int d) {
  std::vector<Integer> values(static_cast<std::size_t>(std::max(multiset.max(), 0)));
  for (const auto& [value, count] : multiset.counts()) {
    if (value < 1) throw ClutterError("simplicial multiset entries must be positive");
    values[value - 1] = count;
  }
  return LambdaSequence(n, d, std::move(values));
}

class SearchBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every complete simplicial order of c, up to limit of them.
inline std::vector<SimplicialOrder> enumerate_simplicial_orders(const Clutter& c, std::size_t limit,
                                                                std::size_t max_submaximal = 24) {
  const std::size_t sc = submaximal_circuits(c).size();
  if (sc > max_submaximal) {
    throw SearchBoundError("clutter has " + std::to_string(sc) + " submaximal circuits, enumeration bound is " +
                           std::to_string(max_submaximal));
  }
  std::vector<SimplicialOrder> out;
  std::vector<SimplicialStep> path;
  std::function<void(const Clutter&)> walk = [&](const Clutter& current) {
    if (out.size() >= limit) return;
    if (current.empty()) {
      out.push_back(SimplicialOrder{path});
      return;
    }
    for (VertexSet e : simplicial_elements(current)) {
      path.push_back({e, open_neighborhood(current, e).size()});
      walk(deletion(current, e));
      path.pop_back();
      if (out.size() >= limit) return;
    }
  };
  walk(c);
  return out;
}

struct CoChordalResult {
  bool co_chordal = false;
  std::vector<VertexSet> sequence;  // simplicial sequence in C_{n,d} ending at c
};

/**
 * Searches for a simplicial sequence in the complete clutter whose deletions
 * leave exactly c. A deletion may never remove a circuit of c, which prunes
 * every branch that drops below c.
 */
inline CoChordalResult is_co_chordal(const Clutter& c) {
  if (c.n() < c.d()) throw ClutterError("co-chordality requires n >= d");
  std::unordered_set<Clutter, ClutterHash> failed;
  std::vector<VertexSet> path;
  std::function<bool(const Clutter&)> walk = [&](const Clutter& current) {
    if (current.size() == c.size()) return true;  // current contains c, so equal
    if (failed.contains(current)) return false;
    for (VertexSet e : simplicial_elements(current)) {
      const bool hits_target = std::any_of(c.circuits().begin(), c.circuits().end(), [&](VertexSet f) { return e.subset_of(f); });
      if (hits_target) continue;
      path.push_back(e);
      if (walk(deletion(current, e))) return true;
      path.pop_back();
    }
    failed.insert(current);
    return false;
  };
  CoChordalResult result;
  result.co_chordal = walk(complete_clutter(c.n(), c.d()));
  if (result.co_chordal) result.sequence = std::move(path);
  return result;
}

}  // namespace clutterlab
