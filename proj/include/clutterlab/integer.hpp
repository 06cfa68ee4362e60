#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clutterlab {

using Integer = boost::multiprecision::cpp_int;

/**
 * Pascal triangle shared by every module, for n below max_row. Rows are
 * appended on demand under an exclusive lock; lookups of rows already present
 * take a shared lock only. Larger n fall back to the product formula.
 */
class BinomialTable {
 public:
  static BinomialTable& instance() {
    static BinomialTable table;
    return table;
  }

  static constexpr std::int64_t max_row = 512;

  Integer operator()(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (n >= max_row) {
      Integer acc = 1;
      for (std::int64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
      return acc;
    }
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    grow(static_cast<std::size_t>(n));
    return rows_[n][k];
  }

 private:
  BinomialTable() { rows_.push_back({Integer(1)}); }

  // Row m stores C(m, 0..m/2).
  void grow(std::size_t n) {
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      const auto& prev = rows_.back();
      std::vector<Integer> row(m / 2 + 1);
      row[0] = 1;
      for (std::size_t k = 1; k <= m / 2; ++k) {
        const std::size_t left = k - 1;
        const std::size_t right = k;
        const Integer& a = prev[std::min(left, m - 1 - left)];
        const Integer& b = right <= m - 1 ? prev[std::min(right, m - 1 - right)] : Integer(0);
        row[k] = a + b;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

/// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) { return BinomialTable::instance()(n, k); }

/// Machine-word binomial for enumeration bounds; throws on overflow.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binomial_u64 overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

inline Integer sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace clutterlab
