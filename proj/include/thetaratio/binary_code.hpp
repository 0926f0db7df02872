#pragma once

#include "thetaratio/errors.hpp"

#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace thetaratio {

/// A row of bits packed into 64-bit words, bit j of the row at word j/64.
using BitRow = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool get_bit(const BitRow& r, std::size_t j) { return (r[j / 64] >> (j % 64)) & 1u; }
inline void set_bit(BitRow& r, std::size_t j, bool v = true) {
  const std::uint64_t m = std::uint64_t{1} << (j % 64);
  if (v) {
    r[j / 64] |= m;
  } else {
    r[j / 64] &= ~m;
  }
}
inline void xor_into(BitRow& dst, const BitRow& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}
inline unsigned popcount(const BitRow& r) {
  unsigned c = 0;
  for (auto w : r) c += static_cast<unsigned>(std::popcount(w));
  return c;
}
/// Inner product over GF(2).
inline bool dot(const BitRow& a, const BitRow& b) {
  unsigned c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<unsigned>(std::popcount(a[i] & b[i]));
  return c & 1u;
}

/// Rank over GF(2); the rows are consumed.
inline std::size_t gf2_rank(std::vector<BitRow> rows, std::size_t n) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !get_bit(rows[piv], col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && get_bit(rows[i], col)) xor_into(rows[i], rows[rank]);
    }
    ++rank;
  }
  return rank;
}

/// Binary linear [n, k] code given by a full-rank generator matrix.
class BinaryLinearCode {
 public:
  /// The zero code {0} of length n.
  explicit BinaryLinearCode(std::size_t n) : n_(n) {
    if (n == 0) throw DomainError("code length must be positive");
  }

  BinaryLinearCode(std::size_t n, std::vector<BitRow> generator) : n_(n), rows_(std::move(generator)) {
    if (n == 0) throw DomainError("code length must be positive");
    for (const auto& r : rows_) {
      if (r.size() != words_for(n)) throw DomainError("generator row has wrong word count");
      if (n % 64 && (r.back() >> (n % 64))) throw DomainError("generator row has bits beyond n");
    }
    if (gf2_rank(rows_, n) != rows_.size()) {
      throw ValidationError("generator matrix is not of full row rank over GF(2)");
    }
  }

  /// Rows as '0'/'1' strings of equal length.
  static BinaryLinearCode from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw DomainError("no generator rows");
    const std::size_t n = rows[0].size();
    std::vector<BitRow> g;
    for (const auto& s : rows) {
      if (s.size() != n) throw DomainError("generator rows differ in length");
      BitRow r(words_for(n), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (s[j] == '1') {
          set_bit(r, j);
        } else if (s[j] != '0') {
          throw DomainError(std::string("bad generator character '") + s[j] + "'");
        }
      }
      g.push_back(std::move(r));
    }
    return BinaryLinearCode(n, std::move(g));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return rows_.size(); }
  const std::vector<BitRow>& generator() const noexcept { return rows_; }

  std::string row_string(std::size_t i) const {
    std::string s(n_, '0');
    for (std::size_t j = 0; j < n_; ++j) {
      if (get_bit(rows_[i], j)) s[j] = '1';
    }
    return s;
  }

 private:
  std::size_t n_;
  std::vector<BitRow> rows_;
};

/// k = n/2 and G G^T = 0 over GF(2).
inline bool is_self_dual(const BinaryLinearCode& c) {
  if (2 * c.k() != c.n()) return false;
  const auto& g = c.generator();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      if (dot(g[i], g[j])) return false;
    }
  }
  return true;
}

/// Generator of the dual code, read off the reduced row echelon form.
inline BinaryLinearCode dual_code(const BinaryLinearCode& c) {
  const std::size_t n = c.n();
  std::vector<BitRow> rows = c.generator();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !get_bit(rows[piv], col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && get_bit(rows[i], col)) xor_into(rows[i], rows[rank]);
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // Each free column f gives x with x_f = 1 and x_{pivot_i} = R[i][f].
  std::vector<BitRow> dual;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitRow x(words_for(n), 0);
    set_bit(x, f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (get_bit(rows[i], f)) set_bit(x, pivots[i]);
    }
    dual.push_back(std::move(x));
  }
  if (dual.empty()) return BinaryLinearCode(n);
  return BinaryLinearCode(n, std::move(dual));
}

/// Text bit matrix: one row per line of '0'/'1' characters. Blank lines,
/// whitespace and '#' comments are ignored.
inline BinaryLinearCode parse_bit_matrix(std::istream& in, const std::string& origin) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t lineno = 0, first_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string bits;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        bits += ch;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw ParseError(origin, lineno, std::string("unexpected character '") + ch + "'");
      }
    }
    if (bits.empty()) continue;
    if (!rows.empty() && bits.size() != rows[0].size()) {
      throw ParseError(origin, lineno, "row length " + std::to_string(bits.size()) + " differs from " +
                                           std::to_string(rows[0].size()) + " on line " +
                                           std::to_string(first_line));
    }
    if (rows.empty()) first_line = lineno;
    rows.push_back(std::move(bits));
  }
  if (rows.empty()) throw ParseError(origin, lineno, "no generator rows");
  return BinaryLinearCode::from_strings(rows);
}

inline BinaryLinearCode parse_bit_matrix(const std::string& text, const std::string& origin = "<string>") {
  std::istringstream in(text);
  return parse_bit_matrix(in, origin);
}

}  // namespace thetaratio
