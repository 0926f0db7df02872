#pragma once

// Independent reference computations used only by the tests. They take the
// slow, obvious route (long direct sums, brute-force enumeration) and share
// no code with the library beyond the Real/Integer/Rational typedefs.

#include "thetaratio/config.hpp"

#include <cstdint>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using thetaratio::Integer;
using thetaratio::Rational;
using thetaratio::Real;

inline Real pi() { return boost::multiprecision::acos(Real(-1)); }

// Direct two-sided sums over v in [-terms, terms], no transformation.
inline Real theta2(const Real& tau, long terms = 1000) {
  Real s = 0;
  for (long v = -terms; v < terms; ++v) {
    Real x = Real(v) + Real(0.5);
    s += boost::multiprecision::exp(-pi() * tau * x * x);
  }
  return s;
}

inline Real theta3(const Real& tau, long terms = 1000) {
  Real s = 0;
  for (long v = -terms; v <= terms; ++v) s += boost::multiprecision::exp(-pi() * tau * Real(v * v));
  return s;
}

inline Real theta4(const Real& tau, long terms = 1000) {
  Real s = 0;
  for (long v = -terms; v <= terms; ++v) {
    Real term = boost::multiprecision::exp(-pi() * tau * Real(v * v));
    s += (v % 2 == 0) ? term : Real(-term);
  }
  return s;
}

// Codes as lists of '0'/'1' rows; all work below is on plain bit masks.
using Rows = std::vector<std::uint32_t>;

inline Rows rows_of(const std::vector<std::string>& g) {
  Rows r;
  for (const auto& s : g) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == '1') m |= 1u << j;
    }
    r.push_back(m);
  }
  return r;
}

inline int parity(std::uint32_t x) { return __builtin_popcount(x) & 1; }

// Weight counts of the span, combination by combination.
inline std::vector<long> span_weights(const Rows& g, int n) {
  std::vector<long> a(n + 1, 0);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << g.size()); ++c) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (c >> i & 1) w ^= g[i];
    }
    ++a[__builtin_popcount(w)];
  }
  return a;
}

// Weight counts of all x in F_2^n orthogonal to every row.
inline std::vector<long> dual_weights(const Rows& g, int n) {
  std::vector<long> a(n + 1, 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (auto r : g) {
      if (parity(x & r)) {
        ok = false;
        break;
      }
    }
    if (ok) ++a[__builtin_popcount(x)];
  }
  return a;
}

inline int rank2(Rows g) {
  int r = 0;
  for (int bit = 0; bit < 32; ++bit) {
    std::size_t p = r;
    while (p < g.size() && !(g[p] >> bit & 1)) ++p;
    if (p == g.size()) continue;
    std::swap(g[p], g[r]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != static_cast<std::size_t>(r) && (g[i] >> bit & 1)) g[i] ^= g[r];
    }
    ++r;
  }
  return r;
}

// Random full-rank k x n generator as strings.
inline std::vector<std::string> random_generator(int n, int k, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::string> g(k, std::string(n, '0'));
    for (auto& row : g) {
      for (auto& ch : row) ch = (rng() & 1) ? '1' : '0';
    }
    if (rank2(rows_of(g)) == k) return g;
  }
}

// Every self-dual code of length n, each as its sorted set of codewords.
// Grown one orthogonal vector at a time, deduplicating at each level.
inline std::vector<std::vector<std::uint32_t>> all_self_dual_codes(int n) {
  std::set<std::vector<std::uint32_t>> level{{0u}};
  for (int dim = 0; dim < n / 2; ++dim) {
    std::set<std::vector<std::uint32_t>> next;
    for (const auto& c : level) {
      std::set<std::uint32_t> in(c.begin(), c.end());
      for (std::uint32_t v = 1; v < (1u << n); ++v) {
        if (parity(v) || in.count(v)) continue;
        bool orth = true;
        for (auto x : c) {
          if (parity(x & v)) {
            orth = false;
            break;
          }
        }
        if (!orth) continue;
        std::vector<std::uint32_t> grown(c);
        for (auto x : c) grown.push_back(x ^ v);
        std::sort(grown.begin(), grown.end());
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// E8 theta series from the Jacobi form, at the same tau.
inline Real theta_e8(const Real& tau) {
  using boost::multiprecision::pow;
  return (pow(theta2(tau), 8) + pow(theta3(tau), 8) + pow(theta4(tau), 8)) / 2;
}

// Expected ratio of the self-dual ensemble, summed term by term from
// E[A_2w] = C(n, 2w) / (2^(k-1) + 1) for 0 < 2w < n.
inline Real ensemble_direct(int n, const Real& t) {
  using boost::multiprecision::pow;
  const int k = n / 2;
  Real s = pow(1 + t, k) + pow(1 - t, k);
  Real binom = 1;  // C(n, j)
  for (int j = 1; j < n; ++j) {
    binom = binom * (n - j + 1) / j;
    if (j % 2) continue;
    int w = j / 2;
    s += binom / (pow(Real(2), k - 1) + 1) * pow(1 + t, k - w) * pow(1 - t, w);
  }
  return s / pow(Real(2), k);
}

}  // namespace oracle
