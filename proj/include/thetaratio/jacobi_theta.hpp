#pragma once

// Jacobi theta functions at purely imaginary argument z = i*tau:
//
//   theta2(i tau) = sum_v q^((v+1/2)^2)
//   theta3(i tau) = sum_v q^(v^2)
//   theta4(i tau) = sum_v (-1)^v q^(v^2),        q = exp(-pi tau)
//
// For tau < 1 the series converge slowly, so we sum at 1/tau instead and
// apply the imaginary transformation
//
//   theta3(i tau) = tau^(-1/2) theta3(i/tau)
//   theta4(i tau) = tau^(-1/2) theta2(i/tau)
//   theta2(i tau) = tau^(-1/2) theta4(i/tau)
//
// All results are PrecisionReal enclosures whose error bound is at most the
// requested tolerance.

#include "thetaratio/precision_real.hpp"

namespace thetaratio {

/// The tau of z = i*tau; strictly positive.
class ThetaArgument {
 public:
  explicit ThetaArgument(Real tau) : tau_(std::move(tau)) {
    if (!(tau_ > 0)) throw DomainError("theta argument: tau must be > 0");
  }
  const Real& tau() const noexcept { return tau_; }
  /// q = exp(-pi tau)
  PrecisionReal nome() const { return exp(-(PrecisionReal::pi() * PrecisionReal::exact(tau_))); }

 private:
  Real tau_;
};

namespace detail {

enum class ThetaKind { two, three, four };

inline void require_achievable(const Real& tol, const Real& scale) {
  if (!(tol > 0)) throw DomainError("theta: tolerance must be > 0");
  if (tol < 64 * unit_roundoff() * (scale > 1 ? scale : Real(1))) {
    throw ToleranceUnachievable("theta: tolerance " + tol.str(3) +
                                " is below the working-precision granularity");
  }
}

/// Direct q-series at argument `arg` (an enclosure, because 1/tau is rounded).
/// Stops once the next term is below tol/4 and adds a geometric tail bound:
/// consecutive terms shrink by at least a factor q.
inline PrecisionReal theta_series(ThetaKind kind, const PrecisionReal& arg, const Real& tol) {
  const PrecisionReal a = PrecisionReal::pi() * arg;
  const PrecisionReal q = exp(-a);
  if (!(q.upper() < 1)) throw PrecisionPropagationError("theta: nome enclosure reaches 1");
  const Real tail_factor = 2 / (1 - q.upper());
  const Real stop = tol / 4;

  auto term = [&](long v) {
    if (kind == ThetaKind::two) {
      // (v + 1/2)^2 = (4v^2 + 4v + 1) / 4
      const long num = 4 * v * v + 4 * v + 1;
      return exp(-(a * PrecisionReal(num)) / PrecisionReal(4));
    }
    return exp(-(a * PrecisionReal(v * v)));
  };

  PrecisionReal sum;
  long v;
  if (kind == ThetaKind::two) {
    v = 0;
  } else {
    sum = PrecisionReal(1);
    v = 1;
  }
  for (;; ++v) {
    PrecisionReal t = term(v);
    if (t.upper() < stop) return sum.widened(tail_factor * t.upper());
    PrecisionReal twice = t + t;
    if (kind == ThetaKind::four && (v & 1)) {
      sum -= twice;
    } else {
      sum += twice;
    }
  }
}

inline PrecisionReal theta_at(ThetaKind kind, const ThetaArgument& arg, const Real& tol) {
  const Real& tau = arg.tau();
  if (tau >= 1) {
    require_achievable(tol, Real(1));
    PrecisionReal r = theta_series(kind, PrecisionReal::exact(tau), tol);
    if (r.err_bound() > tol) throw ToleranceUnachievable("theta: bound exceeds tolerance");
    return r;
  }
  PrecisionReal sqrt_tau = sqrt(PrecisionReal::exact(tau));
  require_achievable(tol, 1 / sqrt_tau.value());
  PrecisionReal inv = PrecisionReal(1) / PrecisionReal::exact(tau);
  ThetaKind dual = kind == ThetaKind::three ? ThetaKind::three
                   : kind == ThetaKind::four ? ThetaKind::two
                                             : ThetaKind::four;
  PrecisionReal r = theta_series(dual, inv, tol * sqrt_tau.lower() / 4) / sqrt_tau;
  if (r.err_bound() > tol) throw ToleranceUnachievable("theta: bound exceeds tolerance");
  return r;
}

}  // namespace detail

inline PrecisionReal theta2(const ThetaArgument& arg, const Real& tol) {
  return detail::theta_at(detail::ThetaKind::two, arg, tol);
}

inline PrecisionReal theta3(const ThetaArgument& arg, const Real& tol) {
  return detail::theta_at(detail::ThetaKind::three, arg, tol);
}

inline PrecisionReal theta4(const ThetaArgument& arg, const Real& tol) {
  return detail::theta_at(detail::ThetaKind::four, arg, tol);
}

/// tau^(1/2) * theta3(i tau). Equals theta3(i/tau), which is how it is
/// summed for tau < 1; the value is always >= 1 and grows only like tau^(1/2).
inline PrecisionReal sqrt_tau_theta3(const Real& tau, const Real& tol) {
  ThetaArgument arg(tau);
  detail::require_achievable(tol, Real(1));
  if (tau < 1) {
    PrecisionReal inv = PrecisionReal(1) / PrecisionReal::exact(tau);
    return detail::theta_series(detail::ThetaKind::three, inv, tol);
  }
  PrecisionReal st = sqrt(PrecisionReal::exact(tau));
  return st * detail::theta_series(detail::ThetaKind::three, PrecisionReal::exact(tau),
                                   tol / (2 * st.upper()));
}

/// s(tau) = theta4(i tau) / theta3(i tau), in [0, 1].
inline PrecisionReal s_of_tau(const Real& tau, const Real& tol) {
  ThetaArgument arg(tau);
  detail::require_achievable(tol, Real(1));
  PrecisionReal num, den;
  if (tau < 1) {
    // the tau^(-1/2) factors cancel
    PrecisionReal inv = PrecisionReal(1) / PrecisionReal::exact(tau);
    num = detail::theta_series(detail::ThetaKind::two, inv, tol / 8);
    den = detail::theta_series(detail::ThetaKind::three, inv, tol / 8);
  } else {
    num = detail::theta_series(detail::ThetaKind::four, PrecisionReal::exact(tau), tol / 8);
    den = detail::theta_series(detail::ThetaKind::three, PrecisionReal::exact(tau), tol / 8);
  }
  PrecisionReal s = num / den;
  if (s.err_bound() > tol) throw PrecisionPropagationError("s(tau): bound exceeds tolerance");
  return s;
}

/// t(tau) = s(tau)^2 = theta4^2 / theta3^2, increasing from 0 (tau -> 0) to 1 (tau -> inf).
inline PrecisionReal t_of_tau(const Real& tau, const Real& tol) {
  PrecisionReal s = s_of_tau(tau, tol / 4);
  PrecisionReal t = s * s;
  if (t.err_bound() > tol) throw PrecisionPropagationError("t(tau): bound exceeds tolerance");
  return t;
}

/// h(t) = t^4 - t^2 + 1 = (t^2 - 1/2)^2 + 3/4, any ring element, no domain check.
template <class T>
T h_value(const T& t) {
  T t2 = t * t;
  return t2 * t2 - t2 + T(1);
}

inline PrecisionReal h_value(const PrecisionReal& t) {
  PrecisionReal t2 = t * t;
  PrecisionReal d = t2 - PrecisionReal(Real(0.5));
  return d * d + PrecisionReal(Real(0.75));
}

/// h on its natural domain [0, 1]; range [3/4, 1].
inline Real h_eval(const Real& t) {
  if (t < 0 || t > 1) throw DomainError("h(t): t must lie in [0, 1]");
  Real d = t * t - Real(0.5);
  return d * d + Real(0.75);
}

inline Real h_eval_unchecked(const Real& t) { return h_value(t); }

/// Closed-form upper bound tau^(-1/2) + exp(-(pi-1)/tau) on theta3(i tau), tau in (0,1).
inline PrecisionReal theta3_upper_bound(const Real& tau) {
  if (!(tau > 0 && tau < 1)) throw DomainError("theta3 upper bound: tau must lie in (0, 1)");
  PrecisionReal t = PrecisionReal::exact(tau);
  return PrecisionReal(1) / sqrt(t) + exp(-(PrecisionReal::pi() - PrecisionReal(1)) / t);
}

}  // namespace thetaratio
