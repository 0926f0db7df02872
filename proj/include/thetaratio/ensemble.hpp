#pragma once

// Expected theta-series ratio over the ensemble of all self-dual codes of
// length n (k = n/2). With r = sqrt(1 - t^2),
//
//   Delta(t) = [(1+t)^k + (1-t)^k + (1+r)^k + (1-r)^k] / (2^k + 2).
//
// Both pairs only keep even powers (of t and of r), so Delta is in fact a
// rational polynomial in t^2; the closed form is the cheap way to evaluate it.

#include "thetaratio/criteria.hpp"
#include "thetaratio/jacobi_theta.hpp"
#include "thetaratio/ratio_polynomial.hpp"

#include <vector>

namespace thetaratio {

struct EnsembleSpec {
  std::size_t n;

  explicit EnsembleSpec(std::size_t len) : n(len) {
    if (n < 4 || n % 2) throw DomainError("ensemble needs an even length n >= 4");
  }
  std::size_t k() const { return n / 2; }
};

/// x^n + y^n + (2^(k-1) + 1)^-1 sum_{w=1}^{k-1} C(n, 2w) x^(n-2w) y^(2w), as A_0..A_n.
inline std::vector<Rational> expected_weight_enumerator(const EnsembleSpec& spec) {
  const std::size_t n = spec.n, k = spec.k();
  const auto binom = binomial_row(n);
  const Integer den = pow2(static_cast<unsigned>(k - 1)) + 1;
  std::vector<Rational> a(n + 1, Rational(0));
  a[0] = a[n] = 1;
  for (std::size_t w = 1; w < k; ++w) a[2 * w] = Rational(binom[2 * w], den);
  return a;
}

/// Exact Delta(t) through the expected enumerator:
/// 2^-k sum_w E[A_w] (1+t)^((n-w)/2) (1-t)^(w/2).
inline RationalPolynomial ensemble_ratio_polynomial(const EnsembleSpec& spec) {
  const auto a = expected_weight_enumerator(spec);
  const std::size_t k = spec.k();
  std::vector<RationalPolynomial> plus(k + 1), minus(k + 1);
  plus[0] = minus[0] = RationalPolynomial::constant(Rational(1));
  for (std::size_t i = 1; i <= k; ++i) {
    plus[i] = plus[i - 1] * RationalPolynomial{Rational(1), Rational(1)};
    minus[i] = minus[i - 1] * RationalPolynomial{Rational(1), Rational(-1)};
  }
  RationalPolynomial f;
  for (std::size_t w2 = 0; w2 <= k; ++w2) {
    if (a[2 * w2] != 0) f = f + a[2 * w2] * (plus[k - w2] * minus[w2]);
  }
  return Rational(1, pow2(static_cast<unsigned>(k))) * f;
}

namespace detail {

/// f~(t; k) = (1+t)^k + (1-t)^k + (1+r)^k + (1-r)^k on an enclosure of t.
/// 1 - r is formed as t^2 / (1 + r) to avoid cancellation near t = 0.
inline PrecisionReal ensemble_f_tilde(unsigned k, const PrecisionReal& t) {
  const PrecisionReal one(1);
  const PrecisionReal t2 = t * t;
  // (1-t)(1+t) keeps a relative error near t = 1, where r -> 0
  PrecisionReal r = sqrt((one - t) * (one + t));
  PrecisionReal one_minus_r = t2 / (one + r);
  return pow(one + t, k) + pow(one - t, k) + pow(one + r, k) + pow(one_minus_r, k);
}

}  // namespace detail

/// Delta(t) on an enclosure of t in [0, 1].
inline PrecisionReal ensemble_ratio(const EnsembleSpec& spec, const PrecisionReal& t) {
  if (t.upper() < 0 || t.lower() > 1) throw DomainError("ensemble ratio: t must lie in [0, 1]");
  const auto k = static_cast<unsigned>(spec.k());
  // clip the enclosure to [0, 1] so that 1 - t^2 stays a valid sqrt argument
  Real lo = t.lower() < 0 ? Real(0) : t.lower();
  Real hi = t.upper() > 1 ? Real(1) : t.upper();
  PrecisionReal tc((lo + hi) / 2, (hi - lo) / 2);
  PrecisionReal den = PrecisionReal::from(pow2(k) + 2);
  return detail::ensemble_f_tilde(k, tc) / den;
}

/// Delta(t) for an exact t, with error at most tol.
inline PrecisionReal ensemble_ratio(const EnsembleSpec& spec, const Real& t, const Real& tol) {
  if (t < 0 || t > 1) throw DomainError("ensemble ratio: t must lie in [0, 1]");
  PrecisionReal v = ensemble_ratio(spec, PrecisionReal::exact(t));
  if (v.err_bound() > tol) throw PrecisionPropagationError("ensemble ratio: bound exceeds tolerance");
  return v;
}

/// a + b sqrt2 with rational a, b.
struct QSqrt2 {
  Rational a, b;
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }
};

inline QSqrt2 pow(QSqrt2 x, unsigned e) {
  QSqrt2 r{Rational(1), Rational(0)};
  while (e) {
    if (e & 1u) r = r * x;
    e >>= 1u;
    if (e) x = x * x;
  }
  return r;
}

/// ((sqrt2 - 1)^k + (sqrt2 + 1)^k) / (2^(k/2) (1 + 2^(k-1))), exactly in Q(sqrt2).
inline QSqrt2 ensemble_minimum_closed_form(const EnsembleSpec& spec) {
  const auto k = static_cast<unsigned>(spec.k());
  QSqrt2 s = pow(QSqrt2{Rational(-1), Rational(1)}, k) + pow(QSqrt2{Rational(1), Rational(1)}, k);
  // 2^(-k/2) = (sqrt2 / 2)^k
  QSqrt2 scale = pow(QSqrt2{Rational(0), Rational(1, 2)}, k);
  QSqrt2 den{Rational(1, pow2(k - 1) + 1), Rational(0)};
  return s * scale * den;
}

/// Exact Delta(1/sqrt2): the polynomial is even in t, so evaluate at u = t^2 = 1/2.
inline Rational ensemble_minimum_exact(const EnsembleSpec& spec) {
  const auto p = ensemble_ratio_polynomial(spec);
  Rational v(0), u(1);
  for (std::size_t i = 0; i < p.coeffs().size(); i += 2) {
    v += p.coeffs()[i] * u;
    u /= 2;
  }
  return v;
}

/// Sampled U-shape check of the unnormalized f~(t; k) around 1/sqrt2.
inline UShapeCertificate ensemble_ushape_check(const EnsembleSpec& spec, unsigned grid_size,
                                               const Real& margin = Real("1e-8")) {
  if (grid_size < 1001) throw DomainError("ensemble U-shape check needs at least 1001 points");
  const auto k = static_cast<unsigned>(spec.k());
  return ushape_sampled(
      [k](const Real& t) { return detail::ensemble_f_tilde(k, PrecisionReal::exact(t)).value(); }, grid_size,
      margin);
}

}  // namespace thetaratio
