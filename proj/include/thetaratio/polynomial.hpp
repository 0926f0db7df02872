#pragma once

#include "thetaratio/config.hpp"
#include "thetaratio/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace thetaratio {

/// Dense univariate polynomial, coefficients in ascending powers.
/// Trailing zeros are stripped so that degree() is exact; the zero
/// polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = v;
    return Polynomial(std::move(c));
  }

  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  /// Horner evaluation in any ring that T converts into.
  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  Polynomial derivative() const {
    if (c_.size() < 2) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> c(a.c_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Long division over a field: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> r(a.c_);
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<T> q(a.c_.size() - b.c_.size() + 1, T(0));
    for (long i = a.degree(); i >= b.degree(); --i) {
      T f = r[i] / b.leading();
      if (f == 0) continue;
      q[i - b.degree()] = f;
      for (long j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  std::string str(const char* var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")";
      if (i > 0) out += std::string("*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Positive rational multiple with coprime integer coefficients.
inline RationalPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  Integer den(1), num(0);
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(denominator(c)));
  for (const auto& c : p.coeffs()) num = gcd(num, Integer(numerator(c) * (den / denominator(c))));
  Rational scale(den, num);
  return scale * p;
}

/// p(x) -> p(x^2)
template <class T>
Polynomial<T> substitute_square(const Polynomial<T>& p) {
  std::vector<T> c(p.coeffs().empty() ? 0 : 2 * p.coeffs().size() - 1, T(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
  return Polynomial<T>(std::move(c));
}

}  // namespace thetaratio
