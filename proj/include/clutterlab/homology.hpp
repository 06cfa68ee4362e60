#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <type_traits>
#include <utility>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/integer.hpp"
#include "clutterlab/invariants.hpp"

namespace clutterlab {

/// Faces of a simplicial complex grouped by size: by_size[k] holds the faces with k vertices.
struct FaceList {
  VertexSet universe;
  std::vector<std::vector<VertexSet>> by_size;

  std::size_t face_count() const {
    std::size_t total = 0;
    for (const auto& faces : by_size) total += faces.size();
    return total;
  }
  int dimension() const { return static_cast<int>(by_size.size()) - 2; }
};

/// beta_{i,j} keyed by (homological index i, internal degree j); only nonzero entries are stored.
struct GradedBettiTable {
  std::map<std::pair<int, int>, Integer> entries;

  bool empty() const { return entries.empty(); }

  Integer at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Integer(0) : it->second;
  }

  /// Row sums over the internal degree, trimmed after the last nonzero.
  BettiSequence totals() const {
    BettiSequence out;
    for (const auto& [key, value] : entries) {
      const auto i = static_cast<std::size_t>(key.first);
      if (out.beta.size() <= i) out.beta.resize(i + 1);
      out.beta[i] += value;
    }
    return out;
  }

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;
};

struct OracleLimits {
  int max_face_universe = 16;  // |W| bound for clique_complex_faces
  int max_hochster_n = 12;
};

namespace detail {

inline FaceList faces_from_table(const std::vector<std::uint8_t>& clique, VertexSet w) {
  FaceList out;
  out.universe = w;
  out.by_size.resize(static_cast<std::size_t>(w.size()) + 1);
  // enumerate submasks of w in increasing numeric order
  const std::uint64_t full = w.mask();
  std::uint64_t sub = 0;
  while (true) {
    if (clique[sub]) out.by_size[std::popcount(sub)].emplace_back(sub);
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  for (auto& faces : out.by_size) std::sort(faces.begin(), faces.end(), LexLess{});
  while (out.by_size.size() > 1 && out.by_size.back().empty()) out.by_size.pop_back();
  return out;
}

/**
 * Rank of an integer matrix by fraction-free (Bareiss) elimination. The int64
 * pass bails out on overflow and the caller retries with big integers.
 */
template <typename T>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const T p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t x = 0;
          std::int64_t y = 0;
          std::int64_t z = 0;
          if (__builtin_mul_overflow(a[r][k], p, &x) || __builtin_mul_overflow(a[rank][k], factor, &y) ||
              __builtin_sub_overflow(x, y, &z)) {
            return std::nullopt;
          }
          a[r][k] = z / prev;
        } else {
          a[r][k] = (a[r][k] * p - a[rank][k] * factor) / prev;
        }
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// Rank of the boundary map from faces of size k+1 to faces of size k.
inline std::size_t boundary_rank(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i].mask(), i);
  std::vector<std::vector<std::int64_t>> m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    std::int64_t sign = 1;
    for (int v : upper[r].vertices()) {
      m[r][index.at(upper[r].without(v).mask())] = sign;
      sign = -sign;
    }
  }
  if (auto rank = bareiss_rank(m)) return *rank;
  std::vector<std::vector<Integer>> big(m.size(), std::vector<Integer>(lower.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < lower.size(); ++c) big[r][c] = m[r][c];
  }
  return *bareiss_rank(std::move(big));
}

}  // namespace detail

/// The cliques of c inside w, closed under subsets (sets below size d count).
inline FaceList clique_complex_faces(const Clutter& c, VertexSet w, const OracleLimits& limits = {}) {
  if (w.size() > limits.max_face_universe) {
    throw OracleBoundError("face enumeration limited to |W| <= " + std::to_string(limits.max_face_universe));
  }
  if (!w.subset_of(VertexSet::range(c.n()))) throw ClutterError("W must lie inside [n]");
  FaceList out;
  out.universe = w;
  out.by_size.resize(static_cast<std::size_t>(w.size()) + 1);
  for (int k = 0; k <= w.size(); ++k) {
    for_each_subset_of_size(w, k, [&](VertexSet f) {
      if (is_clique(c, f)) out.by_size[k].push_back(f);
    });
  }
  while (out.by_size.size() > 1 && out.by_size.back().empty()) out.by_size.pop_back();
  return out;
}

/**
 * dim H~_k over Q for k = -1, 0, 1, ...; entry k+1 of the result is H~_k.
 * dim H~_k = #k-faces - rank(boundary_k) - rank(boundary_{k+1}).
 */
inline std::vector<std::size_t> reduced_homology_ranks(const FaceList& faces) {
  const std::size_t sizes = faces.by_size.size();
  std::vector<std::size_t> ranks(sizes + 1, 0);  // ranks[k] = rank of map from size-k faces to size-(k-1)
  for (std::size_t k = 1; k < sizes; ++k) ranks[k] = detail::boundary_rank(faces.by_size[k - 1], faces.by_size[k]);
  std::vector<std::size_t> out(sizes);
  for (std::size_t k = 0; k < sizes; ++k) out[k] = faces.by_size[k].size() - ranks[k] - ranks[k + 1];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/**
 * Graded Betti numbers of the circuit ideal I(complement of c) = I_Delta by
 * Hochster's formula: beta_{i,j} = sum_{|W| = j} dim H~_{j-i-2}(Delta_W).
 */
inline GradedBettiTable hochster_betti(const Clutter& c, const OracleLimits& limits = {}) {
  if (c.n() < c.d()) throw ClutterError("Hochster oracle requires n >= d");
  if (c.n() > limits.max_hochster_n) {
    throw OracleBoundError("Hochster oracle limited to n <= " + std::to_string(limits.max_hochster_n) + ", got n = " + std::to_string(c.n()));
  }
  const auto clique = clique_table(c);
  GradedBettiTable table;
  const std::uint64_t count = std::uint64_t{1} << c.n();
  for (std::uint64_t w = 1; w < count; ++w) {
    if (clique[w]) continue;  // a simplex is acyclic
    const FaceList faces = detail::faces_from_table(clique, VertexSet(w));
    const auto homology = reduced_homology_ranks(faces);
    const int j = std::popcount(w);
    for (std::size_t slot = 0; slot < homology.size(); ++slot) {
      if (homology[slot] == 0) continue;
      const int k = static_cast<int>(slot) - 1;  // homological degree of H~_k
      const int i = j - k - 2;
      table.entries[{i, j}] += homology[slot];
    }
  }
  return table;
}

/// Every nonzero beta_{i,j} sits at j = i + d (vacuous for the zero ideal).
inline bool has_linear_resolution(const Clutter& c, const OracleLimits& limits = {}) {
  const auto table = hochster_betti(c, limits);
  return std::all_of(table.entries.begin(), table.entries.end(),
                     [&](const auto& entry) { return entry.first.second == entry.first.first + c.d(); });
}

}  // namespace clutterlab
