#pragma once

// Lattices handled here and how their theta series are evaluated:
//
//   Z^n                     Theta = theta3^n,            Delta = 1
//   Construction A, C = C^  Theta = W_C(theta3(2z), theta2(2z))
//                           Delta = 2^-k W_C(sqrt(1+t), sqrt(1-t))
//   C + 2Z^n (any [n,k])    Theta = W_C(theta3(4z), theta2(4z))
//                           Delta = 2^-n W_C(1+s, 1-s)   (quotient by theta3^n)
//   explicit h-basis        Delta = sum_r m_r h(t)^r
//   self-dual ensemble      Delta = expected Delta over all self-dual codes
//
// with z = i tau, s = theta4/theta3 and t = s^2.

#include "thetaratio/binary_code.hpp"
#include "thetaratio/ensemble.hpp"
#include "thetaratio/jacobi_theta.hpp"
#include "thetaratio/ratio_polynomial.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace thetaratio {

struct IntegerLattice {
  std::size_t n;
};
struct ConstructionA {
  std::string name;
  WeightDistribution dist;
};
struct ScaledConstructionA {
  std::string name;
  WeightDistribution dist;
  std::size_t k;
};
struct ExplicitHCoeffs {
  std::size_t n;
  std::vector<Rational> m;
};
struct EnsembleLattice {
  EnsembleSpec spec;
};

class LatticeSpec {
 public:
  using Kind = std::variant<IntegerLattice, ConstructionA, ScaledConstructionA, ExplicitHCoeffs, EnsembleLattice>;

  static LatticeSpec integer_lattice(std::size_t n) {
    if (n == 0) throw DomainError("Z^n needs n >= 1");
    return LatticeSpec(IntegerLattice{n});
  }
  /// Requires a self-dual enumerator: even weights, sum 2^(n/2).
  static LatticeSpec construction_a(std::string name, WeightDistribution dist) {
    require_self_dual_shape(dist);
    return LatticeSpec(ConstructionA{std::move(name), std::move(dist)});
  }
  static LatticeSpec construction_a(std::string name, const BinaryLinearCode& code) {
    if (!is_self_dual(code)) throw DomainError("Construction A spec needs a self-dual code");
    return construction_a(std::move(name), weight_distribution(code));
  }
  static LatticeSpec scaled_construction_a(std::string name, WeightDistribution dist, std::size_t k) {
    if (k > dist.n || dist.total() != pow2(static_cast<unsigned>(k))) {
      throw DomainError("scaled Construction A: distribution does not sum to 2^k");
    }
    return LatticeSpec(ScaledConstructionA{std::move(name), std::move(dist), k});
  }
  static LatticeSpec explicit_h(std::size_t n, std::vector<Rational> m) {
    if (n == 0) throw DomainError("explicit h-basis spec needs n >= 1");
    if (m.empty()) throw DomainError("explicit h-basis spec needs at least one coefficient");
    return LatticeSpec(ExplicitHCoeffs{n, std::move(m)});
  }
  static LatticeSpec ensemble(std::size_t n) { return LatticeSpec(EnsembleLattice{EnsembleSpec(n)}); }

  const Kind& kind() const noexcept { return kind_; }

  std::size_t n() const {
    return std::visit(
        [](const auto& x) -> std::size_t {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntegerLattice> || std::is_same_v<T, ExplicitHCoeffs>) {
            return x.n;
          } else if constexpr (std::is_same_v<T, EnsembleLattice>) {
            return x.spec.n;
          } else {
            return x.dist.n;
          }
        },
        kind_);
  }

  /// Covolume: 2^(n-k) for C + 2Z^n, 1 otherwise.
  Integer volume() const {
    if (auto* s = std::get_if<ScaledConstructionA>(&kind_)) return pow2(static_cast<unsigned>(s->dist.n - s->k));
    return Integer(1);
  }

  std::string label() const {
    return std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntegerLattice>) {
            return "Z" + std::to_string(x.n);
          } else if constexpr (std::is_same_v<T, ConstructionA>) {
            return "A(" + x.name + ")";
          } else if constexpr (std::is_same_v<T, ScaledConstructionA>) {
            return "sqrt2A(" + x.name + ")";
          } else if constexpr (std::is_same_v<T, ExplicitHCoeffs>) {
            return "h-basis" + std::to_string(x.n);
          } else {
            return "ensemble" + std::to_string(x.spec.n);
          }
        },
        kind_);
  }

 private:
  explicit LatticeSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

namespace detail {

/// Calls fn(inner) with shrinking inner tolerances until the result's bound
/// is within tol. Running out of working precision is reported as a
/// propagation failure.
inline PrecisionReal refine_to(const std::function<PrecisionReal(const Real&)>& fn, const Real& tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be > 0");
  Real inner = tol / 16;
  for (int attempt = 0; attempt < 12; ++attempt) {
    PrecisionReal v;
    try {
      v = fn(inner);
    } catch (const ToleranceUnachievable& e) {
      throw PrecisionPropagationError(std::string("cannot reach tolerance at this precision: ") + e.what());
    }
    if (v.err_bound() <= tol) return v;
    Real shrink = v.err_bound() / tol * 8;
    inner /= shrink > 16 ? shrink : Real(16);
  }
  throw PrecisionPropagationError("tolerance not reached after repeated refinement");
}

/// sum_w A_w x^(n-w) y^w on enclosures; terms with A_w = 0 are skipped.
inline PrecisionReal weight_enumerator_at(const WeightDistribution& d, const PrecisionReal& x,
                                          const PrecisionReal& y) {
  std::vector<PrecisionReal> xp(d.n + 1), yp(d.n + 1);
  xp[0] = yp[0] = PrecisionReal(1);
  for (std::size_t i = 1; i <= d.n; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  PrecisionReal s;
  for (std::size_t w = 0; w <= d.n; ++w) {
    if (d[w] != 0) s += PrecisionReal::from(d[w]) * xp[d.n - w] * yp[w];
  }
  return s;
}

/// 2^-k sum_{w'} A_{2w'} (1+t)^(k-w') (1-t)^(w')
inline PrecisionReal code_ratio_at_t(const WeightDistribution& d, const PrecisionReal& t) {
  const std::size_t k = d.n / 2;
  WeightDistribution half(k);
  for (std::size_t w = 0; w <= k; ++w) half[w] = d[2 * w];
  PrecisionReal one(1);
  return weight_enumerator_at(half, one + t, one - t) / PrecisionReal::from(pow2(static_cast<unsigned>(k)));
}

/// 2^-n W_C(1 + s, 1 - s)
inline PrecisionReal scaled_ratio_at_s(const WeightDistribution& d, const PrecisionReal& s) {
  PrecisionReal one(1);
  return weight_enumerator_at(d, one + s, one - s) / PrecisionReal::from(pow2(static_cast<unsigned>(d.n)));
}

inline PrecisionReal h_series_at_t(const std::vector<Rational>& m, const PrecisionReal& t) {
  PrecisionReal h = h_value(t), hp(1), s;
  for (const auto& c : m) {
    if (c != 0) s += PrecisionReal::from(c) * hp;
    hp *= h;
  }
  return s;
}

}  // namespace detail

/// Delta as a function of an enclosure of t = t(tau). For C + 2Z^n this goes
/// through s = sqrt(t), which loses accuracy when t is tiny; the tau-based
/// entry points evaluate s directly instead.
inline PrecisionReal ratio_at_t(const LatticeSpec& spec, const PrecisionReal& t) {
  return std::visit(
      [&](const auto& x) -> PrecisionReal {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntegerLattice>) {
          return PrecisionReal(1);
        } else if constexpr (std::is_same_v<T, ConstructionA>) {
          return detail::code_ratio_at_t(x.dist, t);
        } else if constexpr (std::is_same_v<T, ExplicitHCoeffs>) {
          return detail::h_series_at_t(x.m, t);
        } else if constexpr (std::is_same_v<T, EnsembleLattice>) {
          return ensemble_ratio(x.spec, t);
        } else {
          return detail::scaled_ratio_at_s(x.dist, sqrt(t));
        }
      },
      spec.kind());
}

/// W_C(1 + s(tau), 1 - s(tau)) / 2^n for any [n, k] code.
inline PrecisionReal scaled_ratio_eval(const WeightDistribution& dist, std::size_t k, const Real& tau,
                                       const Real& tol) {
  if (k > dist.n || dist.total() != pow2(static_cast<unsigned>(k))) {
    throw DomainError("scaled ratio: distribution does not sum to 2^k");
  }
  ThetaArgument arg(tau);
  return detail::refine_to(
      [&](const Real& inner) { return detail::scaled_ratio_at_s(dist, s_of_tau(arg.tau(), inner)); }, tol);
}

enum class Sandwich { holds, violated, indeterminate };

/// Checks 2^-(n-k) <= value <= 1 with interval separation.
inline Sandwich scaled_sandwich(const PrecisionReal& value, std::size_t n, std::size_t k) {
  const Real lo = to_real(Rational(1, pow2(static_cast<unsigned>(n - k))));
  if (value.upper() < lo || value.lower() > 1) return Sandwich::violated;
  if (value.lower() >= lo && value.upper() <= 1) return Sandwich::holds;
  return Sandwich::indeterminate;
}

/// Delta_Lambda(tau). Exactly 1 for Z^n.
inline PrecisionReal ratio_eval(const LatticeSpec& spec, const Real& tau, const Real& tol) {
  ThetaArgument arg(tau);
  if (std::holds_alternative<IntegerLattice>(spec.kind())) return PrecisionReal(1);
  if (auto* s = std::get_if<ScaledConstructionA>(&spec.kind())) return scaled_ratio_eval(s->dist, s->k, tau, tol);
  return detail::refine_to([&](const Real& inner) { return ratio_at_t(spec, t_of_tau(arg.tau(), inner)); }, tol);
}

/// Theta_Lambda(i tau).
inline PrecisionReal theta_eval(const LatticeSpec& spec, const Real& tau, const Real& tol) {
  ThetaArgument arg(tau);
  const std::size_t n = spec.n();
  return detail::refine_to(
      [&](const Real& inner) -> PrecisionReal {
        if (auto* c = std::get_if<ConstructionA>(&spec.kind())) {
          ThetaArgument two(2 * arg.tau());
          return detail::weight_enumerator_at(c->dist, theta3(two, inner), theta2(two, inner));
        }
        if (auto* c = std::get_if<ScaledConstructionA>(&spec.kind())) {
          ThetaArgument four(4 * arg.tau());
          return detail::weight_enumerator_at(c->dist, theta3(four, inner), theta2(four, inner));
        }
        PrecisionReal base = pow(theta3(arg, inner), static_cast<unsigned>(n));
        if (std::holds_alternative<IntegerLattice>(spec.kind())) return base;
        return base * ratio_at_t(spec, t_of_tau(arg.tau(), inner));
      },
      tol);
}

}  // namespace thetaratio
