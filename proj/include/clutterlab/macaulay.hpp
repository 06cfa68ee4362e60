#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/chordality.hpp"
#include "clutterlab/clutter.hpp"
#include "clutterlab/integer.hpp"
#include "clutterlab/polynomial.hpp"

namespace clutterlab {

/// a = sum over terms of C(top, bottom); tops strictly decrease and bottoms run i, i-1, ..., j.
struct MacaulayRep {
  std::vector<std::pair<Integer, int>> terms;

  Integer value() const {
    Integer v = 0;
    for (const auto& [top, bottom] : terms) v += binomial(static_cast<std::int64_t>(top), bottom);
    return v;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      out += (k ? " + " : "") + std::string("C(") + terms[k].first.str() + "," + std::to_string(terms[k].second) + ")";
    }
    return out;
  }

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

/// Greedy i-th Macaulay representation of a >= 1.
inline MacaulayRep macaulay_representation(const Integer& a, int i) {
  if (a < 1 || i < 1) throw std::invalid_argument("Macaulay representation needs a >= 1 and i >= 1");
  MacaulayRep rep;
  Integer rest = a;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // largest top with C(top, k) <= rest; C(k, k) = 1 <= rest always holds
    std::int64_t lo = k;
    std::int64_t hi = k + 1;
    while (binomial(hi, k) <= rest) hi = lo + 2 * (hi - lo);
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (binomial(mid, k) <= rest ? lo : hi) = mid;
    }
    rep.terms.emplace_back(Integer(lo), k);
    rest -= binomial(lo, k);
  }
  return rep;
}

/// a^<i>: every term C(a(k), k) becomes C(a(k)+1, k+1); 0^<i> = 0.
inline Integer macaulay_bound(const Integer& a, int i) {
  if (a < 0) throw std::invalid_argument("Macaulay bound needs a >= 0");
  if (a == 0) return 0;
  Integer out = 0;
  for (const auto& [top, bottom] : macaulay_representation(a, i).terms) {
    out += binomial(static_cast<std::int64_t>(top) + 1, bottom + 1);
  }
  return out;
}

/// l_0 = 1 and l_{i+1} <= l_i^<i> for i = 1, ..., m-1. l_1 itself is not bounded here.
inline bool is_m_sequence(const std::vector<Integer>& l) {
  if (l.empty() || l[0] != 1) return false;
  for (const auto& x : l) {
    if (x < 0) return false;
  }
  for (std::size_t i = 1; i + 1 < l.size(); ++i) {
    if (l[i + 1] > macaulay_bound(l[i], static_cast<int>(i))) return false;
  }
  return true;
}

/// p_{n,d}(s) = sum_{j=0}^{n-d} C(n, d+j) (s-1)^j for n >= d >= 0.
inline IntPolynomial p_polynomial(int n, int d) {
  if (d < 0 || n < d) throw std::invalid_argument("p_{n,d} needs n >= d >= 0");
  IntPolynomial p;
  for (int j = 0; j <= n - d; ++j) p += IntPolynomial::linear_power(-1, 1, static_cast<std::size_t>(j)) * binomial(n, d + j);
  return p;
}

/**
 * alpha_0, ..., alpha_{n-d+1} defined by
 *   sum_j alpha_j s^j = sum_{j=0}^{n-d} C(n, d+j) (s-1)^{j+1},
 * together with the partial sums sigma_j = -(alpha_0 + ... + alpha_j).
 */
struct AlphaSequence {
  int n = 0;
  int d = 0;
  std::vector<Integer> alpha;

  /// alpha_k, zero outside 0..n-d+1.
  Integer operator[](long k) const { return (k >= 0 && k < static_cast<long>(alpha.size())) ? alpha[k] : Integer(0); }

  std::vector<Integer> sigma() const {
    std::vector<Integer> out(alpha.size());
    Integer acc = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      acc -= alpha[j];
      out[j] = acc;
    }
    return out;
  }
};

inline AlphaSequence alpha_sequence(int n, int d) {
  if (!(n > d && d > 0)) throw std::invalid_argument("alpha sequence needs n > d > 0");
  const IntPolynomial generating = p_polynomial(n, d) * IntPolynomial{-1, 1};
  AlphaSequence out{n, d, std::vector<Integer>(static_cast<std::size_t>(n - d) + 2)};
  for (std::size_t k = 0; k < out.alpha.size(); ++k) out.alpha[k] = generating.coefficient(k);

  const auto sigma = out.sigma();
  if (sigma.back() != 0) throw std::logic_error("sigma_{n-d+1} must vanish");
  for (const auto& s : sigma) {
    if (s < 0) throw std::logic_error("negative partial sum of alpha");
  }
  return out;
}

/// Closed-form alpha_k; the sum starts at j = max(k, 1) because the generating function has no (s-1)^0 term.
inline Integer alpha_closed_form(int n, int d, int k) {
  Integer acc = 0;
  for (int j = std::max(k, 1); j <= n - d + 1; ++j) acc += sign_power(j - k) * binomial(n, d + j - 1) * binomial(j, k);
  return acc;
}

/// Raised when an (n, d, l) or (n, d, lambda) pair does not correspond to a chordal clutter.
class RealizabilityError : public std::domain_error {
 public:
  RealizabilityError(std::string what, std::size_t index) : std::domain_error(std::move(what)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// lambda_{n-d-i} = alpha_{n-d-i} + l_i - l_{i+1} for i = 0, ..., n-d-1.
inline LambdaSequence lambda_from_lsequence(int n, int d, const std::vector<Integer>& l) {
  if (!(n > d && d > 0)) throw std::invalid_argument("needs n > d > 0");
  const std::size_t len = static_cast<std::size_t>(n - d) + 1;
  if (l.size() != len) throw std::invalid_argument("l-sequence must have n-d+1 = " + std::to_string(len) + " entries");
  if (l[0] != 1) throw std::invalid_argument("l_0 must be 1");
  const auto alpha = alpha_sequence(n, d);
  std::vector<Integer> lambda(len - 1);
  for (int i = 0; i <= n - d - 1; ++i) {
    const int idx = n - d - i;
    lambda[idx - 1] = alpha[idx] + l[i] - l[i + 1];
    if (lambda[idx - 1] < 0) {
      throw RealizabilityError("lambda_" + std::to_string(idx) + " = " + lambda[idx - 1].str() + " is negative",
                               static_cast<std::size_t>(idx));
    }
  }
  return LambdaSequence(n, d, std::move(lambda));
}

/// Inverts lambda_from_lsequence via m_{n-j} = sigma_j - sum_{i>j} lambda_i; returns l_j = m_{d+j}.
inline std::vector<Integer> lsequence_from_lambda(int n, int d, const LambdaSequence& lambda) {
  if (!(n > d && d > 0)) throw std::invalid_argument("needs n > d > 0");
  if (lambda.length() > static_cast<std::size_t>(n - d)) {
    throw RealizabilityError("lambda_" + std::to_string(lambda.length()) + " is nonzero past n-d; only the complete clutter has that",
                             lambda.length());
  }
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    if (lambda[i] < 0) throw RealizabilityError("lambda_" + std::to_string(i) + " is negative", i);
  }
  const auto sigma = alpha_sequence(n, d).sigma();
  std::vector<Integer> l(static_cast<std::size_t>(n - d) + 1);
  for (int j = 0; j <= n - d; ++j) {
    Integer tail = 0;
    for (int i = j + 1; i <= n - d + 1; ++i) tail += lambda[i];
    const Integer m = sigma[j] - tail;
    if (m < 0) {
      throw RealizabilityError("m_" + std::to_string(n - j) + " = " + m.str() + " is negative", static_cast<std::size_t>(n - j));
    }
    l[n - d - j] = m;  // m_{n-j} = l_{n-d-j}
  }
  return l;
}

struct LambdaValidity {
  bool valid = false;
  std::string diagnosis;
  std::optional<std::vector<Integer>> lsequence;
};

/// lambda is realizable iff its l-sequence exists, is an M-sequence, and has l_1 <= d.
inline LambdaValidity is_valid_lambda(int n, int d, const LambdaSequence& lambda) {
  LambdaValidity out;
  if (!(n > d && d > 0)) {
    out.diagnosis = "needs n > d > 0";
    return out;
  }
  try {
    out.lsequence = lsequence_from_lambda(n, d, lambda);
  } catch (const RealizabilityError& e) {
    out.diagnosis = e.what();
    return out;
  }
  const auto& l = *out.lsequence;
  if (l.size() > 1 && l[1] > d) {
    out.diagnosis = "l_1 = " + l[1].str() + " exceeds d = " + std::to_string(d);
    return out;
  }
  if (!is_m_sequence(l)) {
    out.diagnosis = "l-sequence violates Macaulay's growth bound";
    return out;
  }
  out.valid = true;
  out.diagnosis = "valid";
  return out;
}

inline void check_profile_index(int n, int d, int i) {
  if (!(n > d && d > 0)) throw std::invalid_argument("needs n > d > 0");
  if (i < 1 || i > n - d) throw std::out_of_range("i must lie in 1.." + std::to_string(n - d));
}

/// Largest lambda_i over chordal d-clutters on [n] other than the complete one.
inline Integer lambda_max(int n, int d, int i) {
  check_profile_index(n, d, i);
  return alpha_sequence(n, d)[i] + binomial(n - 1 - i, d - 1);
}

/// The lambda-sequence forced on any clutter attaining lambda_max at position i.
inline LambdaSequence extremal_lambda_profile(int n, int d, int i) {
  check_profile_index(n, d, i);
  const auto alpha = alpha_sequence(n, d);
  std::vector<Integer> values(static_cast<std::size_t>(n - d));
  for (int j = 1; j <= n - d; ++j) {
    if (j < i) {
      values[j - 1] = alpha[j];
    } else if (j == i) {
      values[j - 1] = alpha[j] + binomial(n - 1 - j, d - 1);
    } else {
      values[j - 1] = alpha[j] - binomial(n - 1 - j, d - 2);
    }
  }
  return LambdaSequence(n, d, std::move(values));
}

/// {F : |F| = d, F not inside [n-i]}.
inline Clutter extremal_clutter(int n, int d, int i) {
  check_profile_index(n, d, i);
  const VertexSet head = VertexSet::range(n - i);
  std::vector<VertexSet> circuits;
  for_each_subset_of_size(VertexSet::range(n), d, [&](VertexSet f) {
    if (!f.subset_of(head)) circuits.push_back(f);
  });
  return make_clutter(n, d, circuits);
}

/// lambda_i(C_{n,d}) = C(n-1-i, d-2) for 1 <= i <= n-d+1.
inline LambdaSequence complete_lambda(int n, int d) {
  if (!(n >= d && d >= 2)) throw std::invalid_argument("complete lambda needs n >= d >= 2");
  std::vector<Integer> values(static_cast<std::size_t>(n - d) + 1);
  for (int i = 1; i <= n - d + 1; ++i) values[i - 1] = binomial(n - 1 - i, d - 2);
  return LambdaSequence(n, d, std::move(values));
}

/// Exchange condition: x_i u / x_j stays in I for all j in u and i < j outside u.
inline bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal) {
  for (VertexSet u : ideal.gens()) {
    for (int j : u.vertices()) {
      for (int i = 1; i < j; ++i) {
        if (u.contains(i)) continue;
        if (!ideal.contains(u.without(j).with(i))) return false;
      }
    }
  }
  return true;
}

inline int equigenerated_degree(const SquarefreeIdeal& ideal) {
  const auto degree = ideal.degree();
  if (!degree) throw std::invalid_argument("ideal must be nonzero and generated in a single degree");
  return *degree;
}

/// (m_d, ..., m_n) with m_i the number of generators whose largest variable is x_i.
inline std::vector<Integer> m_vector(const SquarefreeIdeal& ideal) {
  const int d = equigenerated_degree(ideal);
  const int n = ideal.n();
  std::vector<Integer> m(static_cast<std::size_t>(std::max(n - d + 1, 0)));
  for (VertexSet u : ideal.gens()) m[u.max() - d] += 1;
  return m;
}

/// Number of squarefree monomials of degree d+j in I, i.e. the generators of I_[d+j].
inline Integer mu_direct(const SquarefreeIdeal& ideal, int j) {
  const int d = equigenerated_degree(ideal);
  Integer count = 0;
  for_each_subset_of_size(VertexSet::range(ideal.n()), d + j, [&](VertexSet f) {
    if (ideal.contains(f)) count += 1;
  });
  return count;
}

/// mu_{d+j}(I) = sum_i C(n-d-i, j) m_{d+i}(I); only valid for squarefree strongly stable I.
inline Integer mu_via_lemma(const SquarefreeIdeal& ideal, int j) {
  if (!is_squarefree_strongly_stable(ideal)) throw std::invalid_argument("ideal is not squarefree strongly stable");
  const int d = equigenerated_degree(ideal);
  const auto m = m_vector(ideal);
  Integer acc = 0;
  for (int i = 0; i <= ideal.n() - d; ++i) acc += binomial(ideal.n() - d - i, j) * m[i];
  return acc;
}

/// Smallest squarefree strongly stable ideal containing the given degree-d generators.
inline SquarefreeIdeal strongly_stable_closure(int n, const std::vector<VertexSet>& gens) {
  std::set<std::uint64_t> seen;
  std::vector<VertexSet> stack(gens.begin(), gens.end());
  while (!stack.empty()) {
    const VertexSet u = stack.back();
    stack.pop_back();
    if (!seen.insert(u.mask()).second) continue;
    for (int j : u.vertices()) {
      for (int i = 1; i < j; ++i) {
        if (!u.contains(i)) stack.push_back(u.without(j).with(i));
      }
    }
  }
  std::vector<VertexSet> all;
  for (auto mask : seen) all.emplace_back(mask);
  return SquarefreeIdeal(n, std::move(all));
}

/**
 * Builds a squarefree strongly stable ideal with m_{d+j} = l_j by taking, for
 * each largest variable x_{d+j}, the lexicographically first l_j generators
 * u = F + {d+j} with F a (d-1)-subset of [d+j-1]. The result is checked
 * afterwards and rejected if it is not strongly stable.
 */
inline SquarefreeIdeal strongly_stable_witness(int n, int d, const std::vector<Integer>& l) {
  if (!(n >= d && d > 0)) throw std::invalid_argument("needs n >= d > 0");
  if (l.size() != static_cast<std::size_t>(n - d) + 1) throw std::invalid_argument("l-sequence must have n-d+1 entries");
  std::vector<VertexSet> gens;
  for (int j = 0; j <= n - d; ++j) {
    const int top = d + j;
    std::size_t want = static_cast<std::size_t>(l[j]);
    if (l[j] < 0 || Integer(want) > binomial(top - 1, d - 1)) {
      throw RealizabilityError("l_" + std::to_string(j) + " is out of range", static_cast<std::size_t>(j));
    }
    for_each_subset_of_size(VertexSet::range(top - 1), d - 1, [&](VertexSet f) {
      if (want == 0) return false;
      gens.push_back(f.with(top));
      --want;
      return true;
    });
  }
  SquarefreeIdeal ideal(n, std::move(gens));
  if (!is_squarefree_strongly_stable(ideal)) throw RealizabilityError("lex witness is not strongly stable", 0);
  return ideal;
}

}  // namespace clutterlab
