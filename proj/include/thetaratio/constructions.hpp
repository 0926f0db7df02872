#pragma once

#include "thetaratio/binary_code.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thetaratio {

/// [2m, m] code with generator [I | A], A_{ij} = r_{(j - i) mod m}.
inline BinaryLinearCode pure_double_circulant(const std::vector<std::uint8_t>& first_row) {
  const std::size_t m = first_row.size();
  if (m == 0) throw DomainError("pure double circulant: empty first row");
  const std::size_t n = 2 * m;
  std::vector<BitRow> g;
  for (std::size_t i = 0; i < m; ++i) {
    BitRow r(words_for(n), 0);
    set_bit(r, i);
    for (std::size_t j = 0; j < m; ++j) {
      if (first_row[(j + m - i) % m]) set_bit(r, m + j);
    }
    g.push_back(std::move(r));
  }
  return BinaryLinearCode(n, std::move(g));
}

inline BinaryLinearCode pure_double_circulant(const std::string& first_row) {
  std::vector<std::uint8_t> bits;
  for (char c : first_row) {
    if (c != '0' && c != '1') throw DomainError("first row must be a 0/1 string");
    bits.push_back(c == '1');
  }
  return pure_double_circulant(bits);
}

/// The m-fold direct sum of the [2,1] repetition code {00, 11}.
inline BinaryLinearCode repetition_sum(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<BitRow> g;
  for (std::size_t i = 0; i < m; ++i) {
    BitRow r(words_for(n), 0);
    set_bit(r, 2 * i);
    set_bit(r, 2 * i + 1);
    g.push_back(std::move(r));
  }
  return BinaryLinearCode(n, std::move(g));
}

/// Reed-Muller RM(r, m): evaluations of all monomials of degree <= r on F_2^m.
inline BinaryLinearCode reed_muller(unsigned r, unsigned m) {
  if (m == 0 || m > 16 || r > m) throw DomainError("reed_muller: need 0 <= r <= m, 1 <= m <= 16");
  const std::size_t n = std::size_t{1} << m;
  std::vector<BitRow> g;
  for (std::uint32_t mono = 0; mono < (1u << m); ++mono) {
    if (static_cast<unsigned>(std::popcount(mono)) > r) continue;
    BitRow row(words_for(n), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if ((x & mono) == mono) set_bit(row, x);
    }
    g.push_back(std::move(row));
  }
  return BinaryLinearCode(n, std::move(g));
}

/// [8,4,4] extended Hamming code, equal to RM(1,3).
inline BinaryLinearCode extended_hamming8() { return reed_muller(1, 3); }

/// [24,12,8] extended Golay code: cyclic [23,12] code with generator
/// polynomial 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, plus an overall parity bit.
inline BinaryLinearCode golay24() {
  const unsigned gpoly[] = {0, 2, 4, 5, 6, 10, 11};
  std::vector<BitRow> g;
  for (std::size_t shift = 0; shift < 12; ++shift) {
    BitRow r(words_for(24), 0);
    for (unsigned e : gpoly) set_bit(r, e + shift);
    set_bit(r, 23);  // every shift of g has weight 7
    g.push_back(std::move(r));
  }
  return BinaryLinearCode(24, std::move(g));
}

/// First row of the [16,8,4] pure double circulant code with A_4 = 12 used
/// for the n = 16 reference row.
inline constexpr const char* kDc16FirstRow = "11101010";

inline BinaryLinearCode double_circulant16() { return pure_double_circulant(kDc16FirstRow); }

}  // namespace thetaratio
