#pragma once

// Exact theta-series ratio polynomials of self-dual Construction A lattices.
//
//   Delta(t) = 2^-k sum_w A_w (1+t)^((n-w)/2) (1-t)^(w/2),   k = n/2
//            = sum_{r=0}^{l} a_r h(t)^r,                     l = floor(n/8)
//
// with h(t) = t^4 - t^2 + 1. Only even powers of t occur, so the
// decomposition is solved in u = t^2 where h = u^2 - u + 1.

#include "thetaratio/bareiss.hpp"
#include "thetaratio/polynomial.hpp"
#include "thetaratio/weight_distribution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thetaratio {

struct RatioPolynomial {
  RationalPolynomial coeffs_t;  // ascending powers of t
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::vector<Rational>> h_coeffs;  // a_0 .. a_l

  std::size_t ell() const { return n / 8; }
};

/// h(t) as an exact polynomial in t.
inline RationalPolynomial h_polynomial() {
  return RationalPolynomial{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
}

/// sum_r a_r h(t)^r
inline RationalPolynomial expand_h_basis(const std::vector<Rational>& a) {
  const RationalPolynomial h = h_polynomial();
  RationalPolynomial out, hp = RationalPolynomial::constant(Rational(1));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] != 0) out = out + a[r] * hp;
    if (r + 1 < a.size()) hp = hp * h;
  }
  return out;
}

inline void require_self_dual_shape(const WeightDistribution& dist) {
  if (dist.n % 2) throw DomainError("self-dual distribution needs even n");
  if (dist.has_odd_weight()) throw OddWeightPresent("distribution has odd-weight codewords");
  if (dist.total() != pow2(static_cast<unsigned>(dist.n / 2))) {
    throw DomainError("distribution does not sum to 2^(n/2)");
  }
}

/// f_C(t) / 2^k for a self-dual enumerator, exact.
inline RatioPolynomial ratio_poly_from_code(const WeightDistribution& dist) {
  require_self_dual_shape(dist);
  const std::size_t k = dist.n / 2;
  // powers of (1+t) and (1-t) up to k
  std::vector<RationalPolynomial> plus(k + 1), minus(k + 1);
  plus[0] = minus[0] = RationalPolynomial::constant(Rational(1));
  const RationalPolynomial p1{Rational(1), Rational(1)}, m1{Rational(1), Rational(-1)};
  for (std::size_t i = 1; i <= k; ++i) {
    plus[i] = plus[i - 1] * p1;
    minus[i] = minus[i - 1] * m1;
  }
  RationalPolynomial f;
  for (std::size_t w2 = 0; w2 <= k; ++w2) {
    const Integer& a = dist[2 * w2];
    if (a == 0) continue;
    f = f + Rational(a) * (plus[k - w2] * minus[w2]);
  }
  RatioPolynomial out;
  out.coeffs_t = Rational(1, pow2(static_cast<unsigned>(k))) * f;
  out.n = dist.n;
  out.k = k;
  return out;
}

/// RatioPolynomial directly from given h-basis coefficients.
inline RatioPolynomial ratio_poly_from_h(std::size_t n, std::vector<Rational> a) {
  RatioPolynomial out;
  out.n = n;
  out.k = n / 2;
  out.coeffs_t = expand_h_basis(a);
  out.h_coeffs = std::move(a);
  return out;
}

/// Fills h_coeffs by an exact solve in the basis {1, h, ..., h^l}.
/// Throws NotInSpan for odd powers, degree above 4l, or an inconsistent
/// system; ValidationError if the coefficients do not sum to 1.
inline RatioPolynomial decompose_h_basis(RatioPolynomial poly) {
  const auto& c = poly.coeffs_t.coeffs();
  const std::size_t ell = poly.ell();
  for (std::size_t i = 1; i < c.size(); i += 2) {
    if (c[i] != 0) throw NotInSpan("ratio polynomial has an odd power of t");
  }
  if (poly.coeffs_t.degree() > static_cast<long>(4 * ell)) {
    throw NotInSpan("ratio polynomial degree " + std::to_string(poly.coeffs_t.degree()) +
                    " exceeds 4*floor(n/8) = " + std::to_string(4 * ell));
  }
  // Columns: h(u)^r in u = t^2; rows: powers u^0 .. u^(2l).
  const RationalPolynomial hu{Rational(1), Rational(-1), Rational(1)};
  RationalMatrix A(2 * ell + 1, std::vector<Rational>(ell + 1));
  RationalPolynomial hp = RationalPolynomial::constant(Rational(1));
  for (std::size_t r = 0; r <= ell; ++r) {
    for (std::size_t i = 0; i <= 2 * ell; ++i) A[i][r] = hp.coeff(i);
    hp = hp * hu;
  }
  std::vector<Rational> b(2 * ell + 1);
  for (std::size_t i = 0; i <= 2 * ell; ++i) b[i] = poly.coeffs_t.coeff(2 * i);
  std::vector<Rational> a = bareiss_solve(A, b);

  Rational sum(0);
  for (const auto& x : a) sum += x;
  if (sum != 1) throw ValidationError("h-basis coefficients sum to " + sum.str() + ", not 1");
  poly.h_coeffs = std::move(a);
  return poly;
}

/// "a4=0 a3=1/2 ... a0=-1", highest index first.
inline std::string format_h_coeffs(const std::vector<Rational>& a) {
  std::string s;
  for (std::size_t r = a.size(); r-- > 0;) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(r) + "=" + a[r].str();
  }
  return s;
}

}  // namespace thetaratio
