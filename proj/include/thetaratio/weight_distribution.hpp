#pragma once

#include "thetaratio/binary_code.hpp"
#include "thetaratio/config.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thetaratio {

/// Exact counts A_0..A_n of codewords by Hamming weight.
struct WeightDistribution {
  std::size_t n = 0;
  std::vector<Integer> counts;

  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t len) : n(len), counts(len + 1, Integer(0)) {}
  WeightDistribution(std::size_t len, std::vector<Integer> c) : n(len), counts(std::move(c)) {
    if (counts.size() != n + 1) throw DomainError("weight distribution needs n+1 counts");
  }

  const Integer& operator[](std::size_t w) const { return counts.at(w); }
  Integer& operator[](std::size_t w) { return counts.at(w); }

  Integer total() const {
    Integer s(0);
    for (const auto& c : counts) s += c;
    return s;
  }
  bool has_odd_weight() const {
    for (std::size_t w = 1; w <= n; w += 2) {
      if (counts[w] != 0) return true;
    }
    return false;
  }
  /// Smallest nonzero weight, or 0 when the code is {0}.
  std::size_t min_distance() const {
    for (std::size_t w = 1; w <= n; ++w) {
      if (counts[w] != 0) return w;
    }
    return 0;
  }
  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.n == b.n && a.counts == b.counts;
  }

  /// "w:count" pairs for the nonzero entries.
  std::string str() const {
    std::string s;
    for (std::size_t w = 0; w <= n; ++w) {
      if (counts[w] == 0) continue;
      if (!s.empty()) s += ' ';
      s += std::to_string(w) + ":" + counts[w].str();
    }
    return s;
  }
};

inline constexpr unsigned kEnumerationLimit = 28;

/// Enumerates all 2^k codewords in Gray-code order, so each step XORs a
/// single generator row into the running word.
inline WeightDistribution weight_distribution(const BinaryLinearCode& code,
                                              unsigned limit = kEnumerationLimit) {
  const std::size_t k = code.k();
  if (k > limit) {
    throw DimensionTooLarge("dimension " + std::to_string(k) + " exceeds enumeration limit " +
                            std::to_string(limit) + "; supply a catalog entry");
  }
  std::vector<std::uint64_t> tally(code.n() + 1, 0);
  BitRow word(words_for(code.n()), 0);
  tally[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    xor_into(word, code.generator()[static_cast<std::size_t>(std::countr_zero(i))]);
    ++tally[popcount(word)];
  }
  WeightDistribution d(code.n());
  for (std::size_t w = 0; w <= code.n(); ++w) d[w] = Integer(tally[w]);
  return d;
}

/// Row n of Pascal's triangle as exact integers.
inline std::vector<Integer> binomial_row(std::size_t n) {
  std::vector<Integer> row(n + 1, Integer(1));
  for (std::size_t i = 1; i < n; ++i) row[i] = row[i - 1] * Integer(n - i + 1) / Integer(i);
  return row;
}

/// K[j][w] = sum_s (-1)^s C(w,s) C(n-w,j-s), built from the three-term
/// recurrence (j+1) K_{j+1}(w) = (n - 2w) K_j(w) - (n - j + 1) K_{j-1}(w).
inline std::vector<std::vector<Integer>> krawtchouk_table(std::size_t n) {
  std::vector<std::vector<Integer>> K(n + 1, std::vector<Integer>(n + 1));
  for (std::size_t w = 0; w <= n; ++w) {
    K[0][w] = 1;
    if (n >= 1) K[1][w] = Integer(static_cast<long>(n) - 2 * static_cast<long>(w));
    for (std::size_t j = 1; j < n; ++j) {
      Integer num = Integer(static_cast<long>(n) - 2 * static_cast<long>(w)) * K[j][w] -
                    Integer(n - j + 1) * K[j - 1][w];
      K[j + 1][w] = num / Integer(j + 1);
    }
  }
  return K;
}

/// Weight distribution of the dual of an [n, k] code: B_j = 2^-k sum_w A_w K_j(w).
inline WeightDistribution macwilliams_transform(const WeightDistribution& dist, std::size_t k) {
  if (k > dist.n) throw DomainError("MacWilliams: k exceeds n");
  if (dist.total() != pow2(static_cast<unsigned>(k))) {
    throw DomainError("MacWilliams: distribution does not sum to 2^k");
  }
  const auto K = krawtchouk_table(dist.n);
  const Integer scale = pow2(static_cast<unsigned>(k));
  WeightDistribution out(dist.n);
  for (std::size_t j = 0; j <= dist.n; ++j) {
    Integer s(0);
    for (std::size_t w = 0; w <= dist.n; ++w) {
      if (dist[w] != 0) s += dist[w] * K[j][w];
    }
    if (s % scale != 0 || s < 0) {
      throw NonIntegerResult("MacWilliams: dual count at weight " + std::to_string(j) +
                             " is not a non-negative integer");
    }
    out[j] = s / scale;
  }
  return out;
}

/// A_{2w} = C(n/2, w), the enumerator of the code generated by n/2 disjoint
/// weight-2 words; its Construction A lattice is isometric to Z^n.
inline WeightDistribution ub_distribution(std::size_t n) {
  if (n == 0 || n % 2) throw DomainError("UB distribution needs a positive even length");
  const auto row = binomial_row(n / 2);
  WeightDistribution d(n);
  for (std::size_t w = 0; w <= n / 2; ++w) d[2 * w] = row[w];
  return d;
}

}  // namespace thetaratio
