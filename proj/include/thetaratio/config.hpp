#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mpfr.h>

#include <string>

namespace thetaratio {

/// Extended-precision real. Precision is process-wide (see WorkingPrecision).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the working precision (decimal digits) for every Real created while
/// the guard is alive. The setting is process-wide, so establish it before
/// starting worker threads and do not change it while they run.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits) : previous_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~WorkingPrecision() { Real::default_precision(previous_); }
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned previous_;
};

/// Binary precision of a freshly constructed Real.
inline long working_bits() {
  Real probe(0);
  return static_cast<long>(mpfr_get_prec(probe.backend().data()));
}

/// Relative rounding bound for one correctly rounded operation, 2^(1-p).
inline const Real& unit_roundoff() {
  thread_local unsigned cached_digits = 0;
  thread_local Real cached;
  if (cached_digits != Real::default_precision()) {
    cached_digits = Real::default_precision();
    cached = ldexp(Real(1), static_cast<int>(1 - working_bits()));
  }
  return cached;
}

inline Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

inline Real pi_value() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Integer pow2(unsigned e) {
  Integer r(1);
  return r << e;
}

/// Rationals print as "p/q" (or "p" when integral), never with a locale.
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace thetaratio
