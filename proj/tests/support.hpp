#pragma once

// Test-only generators and oracles. Nothing here calls the code paths it is
// used to check.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "clutterlab/clutterlab.hpp"

namespace clutterlab::testing {

/// "124" -> {1,2,4}; digits only, so vertices 1..9.
inline VertexSet vs(const std::string& digits) {
  VertexSet s;
  for (char ch : digits) s.insert(ch - '0');
  return s;
}

/// make_clutter(n, d, "123 124 ...").
inline Clutter clutter(int n, int d, const std::string& circuits) {
  std::vector<VertexSet> sets;
  std::string token;
  for (char ch : circuits + " ") {
    if (ch == ' ' || ch == ',') {
      if (!token.empty()) sets.push_back(vs(token));
      token.clear();
    } else {
      token += ch;
    }
  }
  return make_clutter(n, d, sets);
}

inline std::vector<Integer> ints(std::initializer_list<long long> values) {
  return std::vector<Integer>(values.begin(), values.end());
}

inline Clutter worked_example() { return clutter(5, 3, "123 124 134 234 145"); }

/**
 * Random chordal clutter grown by reversing simplicial deletions: pick a
 * (d-1)-set e outside SC(C) and a vertex set S such that e + S is a clique
 * once the circuits e + {c}, c in S, are added. Then e is simplicial in the
 * new clutter and deleting it gives back C.
 */
inline Clutter random_chordal_clutter(int n, int d, int steps, std::mt19937_64& rng) {
  std::vector<VertexSet> circuits;
  auto has = [&](VertexSet f) { return std::find(circuits.begin(), circuits.end(), f) != circuits.end(); };
  std::vector<VertexSet> ridges;
  for_each_subset_of_size(VertexSet::range(n), d - 1, [&](VertexSet e) { ridges.push_back(e); });
  for (int step = 0; step < steps; ++step) {
    std::vector<VertexSet> free_ridges;
    for (VertexSet e : ridges) {
      const bool covered = std::any_of(circuits.begin(), circuits.end(), [&](VertexSet f) { return e.subset_of(f); });
      if (!covered) free_ridges.push_back(e);
    }
    if (free_ridges.empty()) break;
    const VertexSet e = free_ridges[rng() % free_ridges.size()];
    std::vector<int> others;
    for (int v = 1; v <= n; ++v) {
      if (!e.contains(v)) others.push_back(v);
    }
    std::shuffle(others.begin(), others.end(), rng);
    const std::size_t want = 1 + rng() % others.size();
    VertexSet s;
    for (int c : others) {
      if (static_cast<std::size_t>(s.size()) >= want) break;
      // every d-subset of e + s + c that contains c but not all of e must already be a circuit
      bool ok = true;
      for_each_subset_of_size(e | s, d - 1, [&](VertexSet rest) {
        if (rest == e) return true;
        ok = has(rest.with(c));
        return ok;
      });
      if (ok) s = s.with(c);
    }
    for (int c : s.vertices()) circuits.push_back(e.with(c));
  }
  return make_clutter(n, d, circuits);
}

/// Random graph with edge probability p.
inline Clutter random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexSet> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (coin(rng)) edges.push_back(VertexSet{a, b});
    }
  }
  return make_clutter(n, 2, edges);
}

/// Random forest: each vertex after the first joins a random earlier vertex or, unless
/// spanning is set, sometimes starts a new tree.
inline Clutter random_forest(int n, std::mt19937_64& rng, bool spanning = false) {
  std::vector<VertexSet> edges;
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i + 1;
  std::shuffle(label.begin(), label.end(), rng);
  for (int v = 1; v < n; ++v) {
    if (!spanning && rng() % 4 == 0) continue;
    edges.push_back(VertexSet{label[v], label[rng() % v]});
  }
  return make_clutter(n, 2, edges);
}

/**
 * Chordal-graph test by maximum cardinality search followed by the
 * Tarjan-Yannakakis perfect-elimination check.
 */
inline bool is_chordal_graph_peo(const Clutter& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (VertexSet e : g.circuits()) {
    const auto v = e.vertices();
    adj[v[0]][v[1]] = adj[v[1]][v[0]] = true;
  }
  std::vector<int> weight(n + 1, 0);
  std::vector<bool> numbered(n + 1, false);
  std::vector<int> order;  // MCS visit order; its reverse is a PEO when g is chordal
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v) {
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    order.push_back(best);
    for (int u = 1; u <= n; ++u) {
      if (!numbered[u] && adj[best][u]) ++weight[u];
    }
  }
  std::reverse(order.begin(), order.end());
  std::vector<int> position(n + 1);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    int parent = -1;
    std::vector<int> later;
    for (int u = 1; u <= n; ++u) {
      if (adj[v][u] && position[u] > i) later.push_back(u);
    }
    for (int u : later) {
      if (parent < 0 || position[u] < position[parent]) parent = u;
    }
    for (int u : later) {
      if (u != parent && !adj[parent][u]) return false;
    }
  }
  return true;
}

/// Componentwise order on sorted vertex lists of equal size: a <= b iff a_k <= b_k for all k.
inline bool borel_below(VertexSet a, VertexSet b) {
  const auto x = a.vertices();
  const auto y = b.vertices();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > y[k]) return false;
  }
  return true;
}

/// Random squarefree strongly stable ideal: the Borel down-set of a few random d-sets.
inline SquarefreeIdeal random_strongly_stable(int n, int d, std::mt19937_64& rng) {
  std::vector<VertexSet> all;
  for_each_subset_of_size(VertexSet::range(n), d, [&](VertexSet f) { all.push_back(f); });
  const std::size_t seeds = 1 + rng() % 3;
  std::vector<VertexSet> tops;
  for (std::size_t i = 0; i < seeds; ++i) tops.push_back(all[rng() % all.size()]);
  std::vector<VertexSet> gens;
  for (VertexSet f : all) {
    if (std::any_of(tops.begin(), tops.end(), [&](VertexSet t) { return borel_below(f, t); })) gens.push_back(f);
  }
  return SquarefreeIdeal(n, gens);
}

/// Enumerates every M-sequence (1, l_1, ..., l_len-1) with l_1 <= cap1 and entries <= cap.
template <typename Fn>
void for_each_m_sequence(std::size_t len, const Integer& cap1, const Integer& cap, Fn&& fn) {
  std::vector<Integer> l(len);
  l[0] = 1;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == len) {
      fn(l);
      return;
    }
    Integer hi = i == 1 ? std::min(cap1, cap) : std::min(macaulay_bound(l[i - 1], static_cast<int>(i - 1)), cap);
    for (Integer v = 0; v <= hi; ++v) {
      l[i] = v;
      extend(i + 1);
    }
  };
  extend(1);
}

}  // namespace clutterlab::testing
