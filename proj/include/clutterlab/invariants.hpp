#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "clutterlab/chordality.hpp"
#include "clutterlab/clutter.hpp"
#include "clutterlab/integer.hpp"
#include "clutterlab/polynomial.hpp"

namespace clutterlab {

/// (f_{-1}, f_0, ..., f_{delta-1}); index 0 holds f_{-1}.
struct FVector {
  std::vector<Integer> f;

  int delta() const { return static_cast<int>(f.size()) - 1; }
  IntPolynomial polynomial() const { return IntPolynomial(f); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_delta). Entries can be negative; trailing zeros are kept.
struct HVector {
  std::vector<Integer> h;

  int delta() const { return static_cast<int>(h.size()) - 1; }
  IntPolynomial polynomial() const { return IntPolynomial(h); }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Total Betti numbers (beta_0, ..., beta_p) of a linearly resolved ideal; empty for the zero ideal.
struct BettiSequence {
  std::vector<Integer> beta;

  long projective_dimension() const { return static_cast<long>(beta.size()) - 1; }
  friend bool operator==(const BettiSequence&, const BettiSequence&) = default;
};

class SignPatternError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OracleBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline IntPolynomial one_minus_t(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative exponent in (1-t)^k");
  return IntPolynomial::linear_power(1, -1, static_cast<std::size_t>(k));
}

inline IntPolynomial one_plus_t(std::int64_t k) { return IntPolynomial::linear_power(1, 1, static_cast<std::size_t>(k)); }

/// sum_{i<d} C(n, i) t^i; the faces of size below d are all present.
inline IntPolynomial low_faces(int n, int d) {
  std::vector<Integer> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[i] = binomial(n, i);
  return IntPolynomial(std::move(v));
}

/**
 * Reads beta off 1 + sum_i (-1)^{i+1} beta_i t^{i+d}, insisting on the exact
 * shape a d-linear resolution produces.
 */
inline BettiSequence betti_from_series(const IntPolynomial& series, int d) {
  if (series.coefficient(0) != 1) throw SignPatternError("constant term is " + series.coefficient(0).str() + ", expected 1");
  for (int k = 1; k < d; ++k) {
    if (series.coefficient(k) != 0) throw SignPatternError("nonzero coefficient in degree " + std::to_string(k) + " below d");
  }
  BettiSequence out;
  const long deg = series.degree();
  for (long k = d; k <= deg; ++k) {
    const long i = k - d;
    const Integer beta = series.coefficient(k) * sign_power(i + 1);
    if (beta < 0) throw SignPatternError("coefficient of t^" + std::to_string(k) + " has the wrong sign");
    if (beta == 0) throw SignPatternError("Betti number " + std::to_string(i) + " vanishes before the last one");
    out.beta.push_back(beta);
  }
  return out;
}

}  // namespace detail

/**
 * f-polynomial of the clique complex of a chordal clutter from its simplicial
 * multiset, with M_i = sum_k C(N_k, i). The (1+t)^{N_k} form is evaluated as
 * well and the two must agree.
 */
inline IntPolynomial f_polynomial_from_multiset(int n, int d, const Multiset& multiset) {
  IntPolynomial tail;
  const int top = multiset.max();
  std::vector<Integer> m(static_cast<std::size_t>(top) + 1);
  for (int i = 1; i <= top; ++i) {
    for (const auto& [value, count] : multiset.counts()) m[i] += binomial(value, i) * count;
  }
  for (int i = 1; i <= top; ++i) tail += IntPolynomial::monomial(static_cast<std::size_t>(i), m[i]);

  IntPolynomial binomial_form;
  for (const auto& [value, count] : multiset.counts()) {
    binomial_form += (detail::one_plus_t(value) - IntPolynomial{1}) * Integer(count);
  }
  if (binomial_form != tail) throw std::logic_error("f-polynomial forms disagree");

  return detail::low_faces(n, d) + IntPolynomial::monomial(static_cast<std::size_t>(d - 1)) * tail;
}

inline FVector to_f_vector(const IntPolynomial& p) { return FVector{p.coefficients()}; }

/// delta = dim(Delta) + 1 = N + d - 1, or d - 1 for the empty multiset.
inline int clique_complex_delta(int d, const Multiset& multiset) { return multiset.max() + d - 1; }

/// Clique indicator over all subsets of [n], indexed by mask.
inline std::vector<std::uint8_t> clique_table(const Clutter& c) {
  const int n = c.n();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> clique(count, 0);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const int k = std::popcount(mask);
    if (k < c.d()) {
      clique[mask] = 1;
    } else if (k == c.d()) {
      clique[mask] = c.contains(VertexSet(mask));
    } else {
      bool all = true;
      for (std::uint64_t m = mask; m != 0 && all; m &= m - 1) all = clique[mask & ~(m & (~m + 1))];
      clique[mask] = all;
    }
  }
  return clique;
}

/// Counts cliques directly; every subset smaller than d is a face.
inline FVector f_vector_direct(const Clutter& c, int max_n = 20) {
  if (c.n() > max_n) {
    throw OracleBoundError("direct face count limited to n <= " + std::to_string(max_n) + ", got n = " + std::to_string(c.n()));
  }
  const auto clique = clique_table(c);
  std::vector<Integer> f(static_cast<std::size_t>(c.n()) + 1);
  for (std::uint64_t mask = 0; mask < clique.size(); ++mask) {
    if (clique[mask]) f[std::popcount(mask)] += 1;
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return FVector{std::move(f)};
}

inline HVector h_from_f(const FVector& fv) {
  const int delta = fv.delta();
  HVector out;
  out.h.resize(static_cast<std::size_t>(delta) + 1);
  for (int k = 0; k <= delta; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) acc += sign_power(k - i) * binomial(delta - i, k - i) * fv.f[i];
    out.h[k] = acc;
  }
  return out;
}

inline FVector f_from_h(const HVector& hv) {
  const int delta = hv.delta();
  FVector out;
  out.f.resize(static_cast<std::size_t>(delta) + 1);
  for (int k = 0; k <= delta; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) acc += binomial(delta - i, k - i) * hv.h[i];
    out.f[k] = acc;
  }
  return out;
}

inline IntPolynomial h_polynomial_from_multiset(int n, int d, const Multiset& multiset) {
  const int top = multiset.max();
  IntPolynomial h;
  for (int i = 0; i < d; ++i) {
    h += IntPolynomial::monomial(static_cast<std::size_t>(i), binomial(n, i)) * detail::one_minus_t(top + d - i - 1);
  }
  IntPolynomial tail;
  for (const auto& [value, count] : multiset.counts()) {
    tail += (detail::one_minus_t(top - value) - detail::one_minus_t(top)) * Integer(count);
  }
  return h + IntPolynomial::monomial(static_cast<std::size_t>(d - 1)) * tail;
}

/// The h-vector padded to length delta + 1.
inline HVector h_vector_from_multiset(int n, int d, const Multiset& multiset) {
  const auto p = h_polynomial_from_multiset(n, d, multiset);
  HVector out;
  const int delta = clique_complex_delta(d, multiset);
  out.h.resize(static_cast<std::size_t>(delta) + 1);
  for (int k = 0; k <= delta; ++k) out.h[k] = p.coefficient(k);
  if (p.degree() > delta) throw std::logic_error("h-polynomial exceeds delta");
  return out;
}

/// Entry-wise h_k with the split at k = d; zero beyond N + d - 1.
inline HVector h_vector_case_split(int n, int d, const Multiset& multiset) {
  const int top = multiset.max();
  const int delta = top + d - 1;
  HVector out;
  out.h.resize(static_cast<std::size_t>(delta) + 1);
  auto m = [&](int i) {
    Integer acc = 0;
    for (const auto& [value, count] : multiset.counts()) acc += binomial(value, i) * count;
    return acc;
  };
  for (int k = 0; k <= delta; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= std::min(k, d - 1); ++i) acc += sign_power(k - i) * binomial(delta - i, k - i) * binomial(n, i);
    for (int i = d; i <= k; ++i) acc += sign_power(k - i) * binomial(delta - i, k - i) * m(i - d + 1);
    out.h[k] = acc;
  }
  return out;
}

/// The closed form when every N_k = 1 (dim Delta = d - 1): (h_0, ..., h_d) with r circuits.
inline HVector h_vector_one_dimensional(int n, int d, std::int64_t r) {
  HVector out;
  out.h.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k < d; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) acc += sign_power(k - i) * binomial(d - i, k - i) * binomial(n, i);
    out.h[k] = acc;
  }
  Integer last = r;
  for (int i = 0; i < d; ++i) last += sign_power(d - i) * binomial(n, i);
  out.h[d] = last;
  return out;
}

/// Betti numbers of a d-linearly resolved ideal I from the h-vector of S/I.
inline BettiSequence betti_from_h(int n, int d, const HVector& hv) {
  const int delta = hv.delta();
  if (delta > n) throw std::invalid_argument("delta exceeds n");
  return detail::betti_from_series(detail::one_minus_t(n - delta) * hv.polynomial(), d);
}

/// Betti sequence of the circuit ideal straight from the multiset.
inline BettiSequence betti_from_multiset(int n, int d, const Multiset& multiset) {
  Integer circuits = 0;
  for (const auto& [value, count] : multiset.counts()) circuits += Integer(value) * count;
  if (circuits == binomial(n, d)) throw std::invalid_argument("the complete clutter has the zero circuit ideal");
  IntPolynomial series;
  for (int i = 0; i < d; ++i) {
    series += IntPolynomial::monomial(static_cast<std::size_t>(i), binomial(n, i)) * detail::one_minus_t(n - i);
  }
  IntPolynomial tail;
  for (const auto& [value, count] : multiset.counts()) {
    tail += (detail::one_minus_t(n - value - d + 1) - detail::one_minus_t(n - d + 1)) * Integer(count);
  }
  series += IntPolynomial::monomial(static_cast<std::size_t>(d - 1)) * tail;
  return detail::betti_from_series(series, d);
}

/**
 * The number r = M_1 = |C| of circuits. This is the multiplicity of I_Delta
 * when dim Delta = d - 1 (every N_k = 1).
 */
inline Integer multiplicity(const Clutter& c) { return Integer(c.size()); }

}  // namespace clutterlab
