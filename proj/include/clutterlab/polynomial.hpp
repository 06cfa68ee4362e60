#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "clutterlab/integer.hpp"

namespace clutterlab {

/**
 * Dense univariate polynomial with exact integer coefficients. Index i holds the
 * coefficient of t^i; trailing zeros are always stripped so equality is structural.
 */
class IntPolynomial {
 public:
  static constexpr long zero_degree = std::numeric_limits<long>::min();

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  /// (a + b t)^k expanded by the binomial theorem.
  static IntPolynomial linear_power(const Integer& a, const Integer& b, std::size_t k) {
    std::vector<Integer> v(k + 1);
    Integer apow = 1;
    std::vector<Integer> apows(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      apows[i] = apow;
      apow *= a;
    }
    Integer bpow = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      v[i] = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)) * bpow * apows[k - i];
      bpow *= b;
    }
    return IntPolynomial(std::move(v));
  }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? zero_degree : static_cast<long>(coeffs_.size()) - 1; }

  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer leading_coefficient() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(t + shift), i.e. the Taylor shift.
  IntPolynomial shifted(const Integer& shift) const {
    IntPolynomial result;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      result = result * IntPolynomial(std::vector<Integer>{shift, 1}) + constant(coeffs_[i]);
    }
    return result;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(const IntPolynomial& a) { return IntPolynomial() - a; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(char var = 't') const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

}  // namespace clutterlab
