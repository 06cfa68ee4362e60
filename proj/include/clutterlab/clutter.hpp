#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace clutterlab {

/// Hard cap on the vertex count: vertex sets are single 64-bit masks.
inline constexpr int max_vertices = 64;

class ClutterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A finite set of vertices drawn from [n] = {1, ..., n}, stored as a bit mask
 * with vertex v at bit v-1.
 */
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_vertices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  /// The interval {1, ..., n}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return v >= 1 && v <= 64 && ((mask_ >> (v - 1)) & 1U); }
  constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr int max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  void insert(int v) {
    if (v < 1 || v > max_vertices) throw ClutterError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(max_vertices));
    mask_ |= std::uint64_t{1} << (v - 1);
  }

  constexpr VertexSet with(int v) const { return VertexSet(mask_ | (std::uint64_t{1} << (v - 1))); }
  constexpr VertexSet without(int v) const { return VertexSet(mask_ & ~(std::uint64_t{1} << (v - 1))); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order of the sorted vertex lists (a proper prefix sorts first).
  friend constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (a.mask_ & low) return (b.mask_ & above) != 0;
    return (a.mask_ & above) == 0;
  }

  /// Compact form ("124") when every vertex is a digit, else "{1,2,14}".
  std::string to_string() const {
    const auto vs = vertices();
    const bool compact = !vs.empty() && vs.back() <= 9;
    std::string out = compact ? "" : "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!compact && i > 0) out += ",";
      out += std::to_string(vs[i]);
    }
    if (!compact) out += "}";
    return out;
  }

 private:
  std::uint64_t mask_ = 0;
};

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

/// Calls fn(subset) for every k-element subset of base, in lexicographic order.
template <typename Fn>
void for_each_subset_of_size(VertexSet base, int k, Fn&& fn) {
  const std::vector<int> vs = base.vertices();
  const int m = static_cast<int>(vs.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << (vs[i] - 1);
    if constexpr (std::is_same_v<std::invoke_result_t<Fn, VertexSet>, bool>) {
      if (!fn(VertexSet(mask))) return;
    } else {
      fn(VertexSet(mask));
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/**
 * A d-uniform clutter on [n]. Circuits are kept sorted lexicographically and
 * duplicate-free, so equality and hashing work on the canonical form.
 */
class Clutter {
 public:
  Clutter() = default;

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<VertexSet>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }

  bool contains(VertexSet f) const { return std::binary_search(circuits_.begin(), circuits_.end(), f, LexLess{}); }

  friend bool operator==(const Clutter&, const Clutter&) = default;

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_) * 0x9e3779b97f4a7c15ULL ^ std::hash<int>{}(d_);
    for (VertexSet f : circuits_) h = (h ^ std::hash<std::uint64_t>{}(f.mask())) * 0x100000001b3ULL;
    return h;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < circuits_.size(); ++i) {
      if (i) out += ",";
      out += circuits_[i].to_string();
    }
    return out + "}";
  }

  /// Builds without validation; circuits must already be d-sets inside [n].
  static Clutter from_trusted(int n, int d, std::vector<VertexSet> circuits) {
    Clutter c;
    c.n_ = n;
    c.d_ = d;
    std::sort(circuits.begin(), circuits.end(), LexLess{});
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    c.circuits_ = std::move(circuits);
    return c;
  }

 private:
  int n_ = 0;
  int d_ = 1;
  std::vector<VertexSet> circuits_;
};

struct ClutterHash {
  std::size_t operator()(const Clutter& c) const { return c.hash(); }
};

inline void check_dimensions(int n, int d) {
  if (n < 1) throw ClutterError("vertex count must be positive, got " + std::to_string(n));
  if (d < 1) throw ClutterError("uniformity must be positive, got " + std::to_string(d));
  if (n > max_vertices) throw ClutterError("vertex count " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_vertices));
}

inline Clutter make_clutter(int n, int d, const std::vector<VertexSet>& circuits) {
  check_dimensions(n, d);
  if (n < d && !circuits.empty()) throw ClutterError("a clutter with n < d has no circuits");
  const VertexSet universe = VertexSet::range(n);
  for (VertexSet f : circuits) {
    if (f.size() != d) throw ClutterError("circuit " + f.to_string() + " has " + std::to_string(f.size()) + " vertices, expected " + std::to_string(d));
    if (!f.subset_of(universe)) throw ClutterError("circuit " + f.to_string() + " has a vertex outside 1.." + std::to_string(n));
  }
  return Clutter::from_trusted(n, d, circuits);
}

inline Clutter make_clutter(int n, int d, const std::vector<std::vector<int>>& circuits) {
  check_dimensions(n, d);
  std::vector<VertexSet> sets;
  sets.reserve(circuits.size());
  for (const auto& c : circuits) {
    VertexSet s;
    for (int v : c) {
      if (v < 1 || v > n) throw ClutterError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (s.contains(v)) throw ClutterError("repeated vertex " + std::to_string(v) + " in circuit");
      s.insert(v);
    }
    sets.push_back(s);
  }
  return make_clutter(n, d, sets);
}

/// All d-subsets of [n]; no circuits when n < d.
inline Clutter complete_clutter(int n, int d) {
  check_dimensions(n, d);
  std::vector<VertexSet> all;
  for_each_subset_of_size(VertexSet::range(n), d, [&](VertexSet s) { all.push_back(s); });
  return Clutter::from_trusted(n, d, std::move(all));
}

inline Clutter complement(const Clutter& c) {
  if (c.n() < c.d()) throw ClutterError("complement requires n >= d");
  std::vector<VertexSet> out;
  for_each_subset_of_size(VertexSet::range(c.n()), c.d(), [&](VertexSet s) {
    if (!c.contains(s)) out.push_back(s);
  });
  return Clutter::from_trusted(c.n(), c.d(), std::move(out));
}

/// SC(C): the (d-1)-sets lying in some circuit, sorted lexicographically.
inline std::vector<VertexSet> submaximal_circuits(const Clutter& c) {
  std::vector<VertexSet> out;
  for (VertexSet f : c.circuits()) {
    for (std::uint64_t m = f.mask(); m != 0; m &= m - 1) out.push_back(VertexSet(f.mask() & ~(m & (~m + 1))));
  }
  std::sort(out.begin(), out.end(), LexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void check_submaximal_size(const Clutter& c, VertexSet e) {
  if (e.size() != c.d() - 1) {
    throw ClutterError("expected a " + std::to_string(c.d() - 1) + "-set, got " + e.to_string());
  }
}

inline VertexSet open_neighborhood(const Clutter& c, VertexSet e) {
  check_submaximal_size(c, e);
  VertexSet out;
  for (VertexSet f : c.circuits()) {
    if (e.subset_of(f)) out = out | (f - e);
  }
  return out;
}

inline VertexSet closed_neighborhood(const Clutter& c, VertexSet e) { return e | open_neighborhood(c, e); }

/// Every d-subset of v is a circuit; sets smaller than d are cliques vacuously.
inline bool is_clique(const Clutter& c, VertexSet v) {
  bool all = true;
  for_each_subset_of_size(v, c.d(), [&](VertexSet s) {
    all = c.contains(s);
    return all;
  });
  return all;
}

/// C \ e: drop every circuit containing e.
inline Clutter deletion(const Clutter& c, VertexSet e) {
  check_submaximal_size(c, e);
  std::vector<VertexSet> kept;
  kept.reserve(c.size());
  for (VertexSet f : c.circuits()) {
    if (!e.subset_of(f)) kept.push_back(f);
  }
  Clutter out = Clutter::from_trusted(c.n(), c.d(), std::move(kept));
  return out;
}

/**
 * A squarefree monomial ideal, each monomial x_F written as its support F.
 * Generators are reduced to the minimal antichain on construction.
 */
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;

  SquarefreeIdeal(int n, std::vector<VertexSet> gens) : n_(n) {
    if (n < 0 || n > max_vertices) throw ClutterError("ideal ambient variable count out of range");
    const VertexSet universe = VertexSet::range(n);
    for (VertexSet g : gens) {
      if (!g.subset_of(universe)) throw ClutterError("generator " + g.to_string() + " uses a variable outside 1.." + std::to_string(n));
    }
    std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
      return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (VertexSet g : gens) {
      const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](VertexSet h) { return h.subset_of(g); });
      if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), LexLess{});
  }

  int n() const { return n_; }
  const std::vector<VertexSet>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  std::optional<int> degree() const {
    if (gens_.empty()) return std::nullopt;
    const int k = gens_.front().size();
    for (VertexSet g : gens_) {
      if (g.size() != k) return std::nullopt;
    }
    return k;
  }

  /// Whether x_F lies in the ideal.
  bool contains(VertexSet f) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return g.subset_of(f); });
  }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> gens_;
};

/// I(complement of C), which is the Stanley-Reisner ideal of the clique complex.
inline SquarefreeIdeal circuit_ideal(const Clutter& c) {
  if (c.n() < c.d()) throw ClutterError("circuit ideal requires n >= d");
  return SquarefreeIdeal(c.n(), complement(c).circuits());
}

}  // namespace clutterlab
