#pragma once

#include "thetaratio/config.hpp"
#include "thetaratio/errors.hpp"

#include <optional>
#include <string>

namespace thetaratio {

/// A real number known to lie in [value - err_bound, value + err_bound].
///
/// Every operation returns a new enclosure whose bound covers the input
/// bounds (sum rule for +/-, product rule for *) plus one rounding of the
/// result. Bounds are themselves computed in rounded arithmetic, so each is
/// inflated by a few units of roundoff to stay on the safe side.
class PrecisionReal {
 public:
  PrecisionReal() : value_(0), err_(0) {}
  explicit PrecisionReal(Real value, Real err_bound = Real(0))
      : value_(std::move(value)), err_(std::move(err_bound)) {
    if (err_ < 0) throw DomainError("PrecisionReal: negative error bound");
  }
  explicit PrecisionReal(long v) : value_(v), err_(0) {}

  static PrecisionReal exact(const Real& v) { return PrecisionReal(v); }
  static PrecisionReal from(const Integer& z) { return rounded(to_real(z)); }
  static PrecisionReal from(const Rational& q) { return rounded(to_real(q)); }
  static PrecisionReal pi() { return rounded(pi_value()); }

  const Real& value() const noexcept { return value_; }
  const Real& err_bound() const noexcept { return err_; }
  Real lower() const { return value_ - err_; }
  Real upper() const { return value_ + err_; }
  Real magnitude() const { return abs(value_) + err_; }
  bool contains(const Real& x) const { return lower() <= x && x <= upper(); }
  bool is_exact() const { return err_ == 0; }

  /// Adds `extra` to the error bound, e.g. a truncation tail.
  PrecisionReal widened(const Real& extra) const {
    return PrecisionReal(value_, inflate(err_ + abs(extra)));
  }

  PrecisionReal operator-() const { return PrecisionReal(-value_, err_); }

  friend PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b) {
    Real v = a.value_ + b.value_;
    return PrecisionReal(v, inflate(a.err_ + b.err_ + rounding_of(v)));
  }
  friend PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b) {
    Real v = a.value_ - b.value_;
    return PrecisionReal(v, inflate(a.err_ + b.err_ + rounding_of(v)));
  }
  friend PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b) {
    Real v = a.value_ * b.value_;
    Real e = abs(a.value_) * b.err_ + abs(b.value_) * a.err_ + a.err_ * b.err_;
    return PrecisionReal(v, inflate(e + rounding_of(v)));
  }
  friend PrecisionReal operator/(const PrecisionReal& a, const PrecisionReal& b) {
    Real bmin = abs(b.value_) - b.err_;
    if (bmin <= 0) throw PrecisionPropagationError("PrecisionReal: divisor interval contains zero");
    Real v = a.value_ / b.value_;
    Real e = (abs(a.value_) * b.err_ + abs(b.value_) * a.err_) / (abs(b.value_) * bmin);
    return PrecisionReal(v, inflate(e + rounding_of(v)));
  }
  PrecisionReal& operator+=(const PrecisionReal& o) { return *this = *this + o; }
  PrecisionReal& operator-=(const PrecisionReal& o) { return *this = *this - o; }
  PrecisionReal& operator*=(const PrecisionReal& o) { return *this = *this * o; }
  PrecisionReal& operator/=(const PrecisionReal& o) { return *this = *this / o; }

  friend PrecisionReal exp(const PrecisionReal& x) {
    Real v = boost::multiprecision::exp(x.value_);
    // exp(x+e) - exp(x) <= exp(x) * e * exp(e)
    Real e = v * x.err_ * boost::multiprecision::exp(x.err_);
    return PrecisionReal(v, inflate(e + rounding_of(v)));
  }

  friend PrecisionReal sqrt(const PrecisionReal& x) {
    if (x.upper() < 0) throw DomainError("PrecisionReal: sqrt of a negative enclosure");
    if (x.lower() <= 0) {
      // The enclosure touches zero: cover [0, sqrt(upper)].
      Real hi = boost::multiprecision::sqrt(x.upper());
      Real v = x.value_ > 0 ? Real(boost::multiprecision::sqrt(x.value_)) : Real(0);
      return PrecisionReal(v, inflate(hi + rounding_of(hi)));
    }
    Real v = boost::multiprecision::sqrt(x.value_);
    Real e = x.err_ / (v + boost::multiprecision::sqrt(x.lower()));
    return PrecisionReal(v, inflate(e + rounding_of(v)));
  }

  friend PrecisionReal pow(PrecisionReal base, unsigned exponent) {
    PrecisionReal result(1);
    while (exponent) {
      if (exponent & 1u) result *= base;
      exponent >>= 1u;
      if (exponent) base *= base;
    }
    return result;
  }

  /// Sign of (*this - other) when the enclosures are disjoint, nullopt when
  /// they overlap. Two exact equal values compare equal.
  std::optional<int> try_compare(const PrecisionReal& other) const {
    if (upper() < other.lower()) return -1;
    if (lower() > other.upper()) return 1;
    if (is_exact() && other.is_exact() && value_ == other.value_) return 0;
    return std::nullopt;
  }

  int compare(const PrecisionReal& other) const {
    auto c = try_compare(other);
    if (!c) {
      throw IndeterminateComparison("cannot order " + str(20) + " and " + other.str(20));
    }
    return *c;
  }

  friend bool operator<(const PrecisionReal& a, const PrecisionReal& b) { return a.compare(b) < 0; }
  friend bool operator>(const PrecisionReal& a, const PrecisionReal& b) { return a.compare(b) > 0; }
  friend bool operator<=(const PrecisionReal& a, const PrecisionReal& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const PrecisionReal& a, const PrecisionReal& b) { return a.compare(b) >= 0; }

  std::string str(int digits = 20) const {
    return value_.str(digits, std::ios_base::scientific) + " +/- " +
           err_.str(3, std::ios_base::scientific);
  }

 private:
  static PrecisionReal rounded(const Real& v) { return PrecisionReal(v, rounding_of(v)); }
  static Real rounding_of(const Real& v) { return abs(v) * unit_roundoff(); }
  static Real inflate(const Real& e) { return e * (1 + 8 * unit_roundoff()); }

  Real value_;
  Real err_;
};

}  // namespace thetaratio
