#pragma once

// U-shape, sufficient and necessary conditions on h-basis coefficients.
//
// With f(t) = sum_r a_r h(t)^r,
//   f'(t) = h'(t) g(t),  h'(t) = 2t(2t^2 - 1),  g(t) = sum_{r>=1} r a_r h(t)^(r-1),
// and h' < 0 on (0, 1/sqrt2), h' > 0 on (1/sqrt2, 1). So f is U-shaped on
// (0, 1) around 1/sqrt2 exactly when g > 0 there.

#include "thetaratio/jacobi_theta.hpp"
#include "thetaratio/ratio_polynomial.hpp"
#include "thetaratio/sturm.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace thetaratio {

enum class Verdict { u_shaped, not_u_shaped, indeterminate };
enum class CheckMethod { exact_sturm, sampled };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::u_shaped: return "u_shaped";
    case Verdict::not_u_shaped: return "not_u_shaped";
    default: return "indeterminate";
  }
}
inline const char* to_string(CheckMethod m) { return m == CheckMethod::exact_sturm ? "exact_sturm" : "sampled"; }

/// What the exact route actually established.
struct SturmProof {
  RationalPolynomial g;           // with factors t and (1 - t) removed
  std::size_t chain_length = 0;
  int roots_in_open_interval = 0;  // distinct roots of g in (0, 1)
  Rational g_at_half;
};

struct UShapeCertificate {
  Verdict verdict = Verdict::indeterminate;
  CheckMethod method = CheckMethod::sampled;
  std::optional<Real> witness;           // a t where the sign condition fails
  std::optional<Rational> exact_witness;  // exact route only
  bool g_positivity = false;
  std::optional<SturmProof> proof;
};

struct SufficientConditionTerm {
  std::size_t j;
  Rational alpha, beta;
  bool passes;
};

struct SufficientConditionReport {
  std::vector<SufficientConditionTerm> per_j;  // j = l-1 down to 1
  bool overall = false;
  bool degenerate = false;  // l <= 1: no j-range, decided by a_1 > 0
};

/// alpha_j = sum_{r=j}^{l} r!/(r-j)! a_r (3/4)^(r-j),  beta_j = sum_{r=j}^{l} r!/(r-j)! a_r,
/// for j in [1 : l-1]; passes when min(alpha_j, beta_j) > 0 for all j.
inline SufficientConditionReport sufficient_condition(const std::vector<Rational>& a) {
  if (a.empty()) throw DomainError("sufficient condition: no coefficients");
  const std::size_t ell = a.size() - 1;
  SufficientConditionReport rep;
  if (ell <= 1) {
    rep.degenerate = true;
    rep.overall = ell == 1 && a[1] > 0;
    return rep;
  }
  rep.overall = true;
  for (std::size_t j = ell - 1; j >= 1; --j) {
    Rational alpha(0), beta(0), q(1);
    for (std::size_t r = j; r <= ell; ++r) {
      Integer falling(1);  // r! / (r-j)!
      for (std::size_t i = r - j + 1; i <= r; ++i) falling *= Integer(i);
      Rational term = Rational(falling) * a[r];
      alpha += term * q;
      beta += term;
      q *= Rational(3, 4);
    }
    bool ok = alpha > 0 && beta > 0;
    rep.per_j.push_back({j, alpha, beta, ok});
    rep.overall = rep.overall && ok;
  }
  return rep;
}

struct NecessaryConditionResult {
  Rational value;
  bool passes;
};

/// sum_w (A_w^UB - A_w) / (w + 1), which must be >= 0 for a ratio bounded by 1.
inline NecessaryConditionResult necessary_condition(const WeightDistribution& dist) {
  require_self_dual_shape(dist);
  const WeightDistribution ub = ub_distribution(dist.n);
  Rational v(0);
  for (std::size_t w = 0; w <= dist.n; ++w) {
    if (ub[w] != dist[w]) v += Rational(ub[w] - dist[w], Integer(w + 1));
  }
  return {v, v >= 0};
}

/// g(t) = sum_{r>=1} r a_r h(t)^(r-1)
inline RationalPolynomial g_polynomial(const std::vector<Rational>& a) {
  std::vector<Rational> b;
  for (std::size_t r = 1; r < a.size(); ++r) b.push_back(Rational(static_cast<long>(r)) * a[r]);
  return expand_h_basis(b);
}

inline void require_unit_sum(const std::vector<Rational>& a) {
  Rational s(0);
  for (const auto& x : a) s += x;
  if (s != 1) throw PreconditionViolation("h-basis coefficients must sum to 1 (got " + s.str() + ")");
}

/// Exact U-shape decision by Sturm's theorem on g over (0, 1).
inline UShapeCertificate ushape_exact(const std::vector<Rational>& a) {
  require_unit_sum(a);
  UShapeCertificate cert;
  cert.method = CheckMethod::exact_sturm;
  const Rational half(1, 2);
  RationalPolynomial g = g_polynomial(a);
  if (g.is_zero()) {
    // f is constant: no strict monotonicity anywhere
    cert.verdict = Verdict::not_u_shaped;
    cert.exact_witness = half;
    cert.witness = to_real(half);
    return cert;
  }
  SturmProof proof;
  proof.g = deflate_endpoints(g);
  SturmChain chain(proof.g);
  proof.chain_length = chain.polys().size();
  proof.roots_in_open_interval = chain.count_roots(Rational(0), Rational(1));
  proof.g_at_half = g(half);

  if (proof.roots_in_open_interval == 0) {
    cert.g_positivity = proof.g_at_half > 0;
    cert.verdict = cert.g_positivity ? Verdict::u_shaped : Verdict::not_u_shaped;
    if (!cert.g_positivity) cert.exact_witness = half;
  } else {
    cert.verdict = Verdict::not_u_shaped;
    // Prefer a point with g < 0; otherwise g only touches zero, at a root.
    auto roots = isolate_roots(proof.g, Rational(0), Rational(1), Rational(1, Integer(1) << 64));
    // one probe in each gap between 0, the isolating intervals and 1
    std::vector<Rational> probes;
    Rational left(0);
    for (const auto& iv : roots) {
      if (left < iv.lo) probes.push_back((left + iv.lo) / 2);
      left = iv.hi;
    }
    if (left < 1) probes.push_back((left + 1) / 2);
    for (const auto& p : probes) {
      if (g(p) < 0) {
        cert.exact_witness = p;
        break;
      }
    }
    if (!cert.exact_witness) cert.exact_witness = (roots.front().lo + roots.front().hi) / 2;
  }
  if (cert.exact_witness) cert.witness = to_real(*cert.exact_witness);
  cert.proof = std::move(proof);
  return cert;
}

inline constexpr unsigned kMinSampledGrid = 101;

/// Central-difference sign check of f on a uniform grid over [0, 1].
/// Points within max(margin, grid spacing) of 1/sqrt2 are skipped, since the
/// difference there spans the minimum itself; the endpoints are skipped.
inline UShapeCertificate ushape_sampled(const std::function<Real(const Real&)>& f, unsigned grid_size,
                                        const Real& margin) {
  if (grid_size < kMinSampledGrid) throw DomainError("sampled U-shape check needs at least 101 points");
  if (!(margin > 0)) throw DomainError("sampled U-shape check needs a positive margin");
  UShapeCertificate cert;
  cert.method = CheckMethod::sampled;
  const Real step = Real(1) / (grid_size - 1);
  const Real pivot = sqrt(Real(0.5));
  const Real radius = margin > step ? margin : step;

  std::vector<Real> values(grid_size);
  for (unsigned i = 0; i < grid_size; ++i) values[i] = f(Real(i) * step);

  std::optional<Real> undecided;
  for (unsigned i = 1; i + 1 < grid_size; ++i) {
    const Real t = Real(i) * step;
    if (abs(t - pivot) <= radius) continue;
    const Real d = values[i + 1] - values[i - 1];
    if (abs(d) < margin) {
      if (!undecided) undecided = t;
      continue;
    }
    const bool want_negative = t < pivot;
    if ((d < 0) != want_negative) {
      cert.verdict = Verdict::not_u_shaped;
      cert.witness = t;
      return cert;
    }
  }
  if (undecided) {
    cert.verdict = Verdict::indeterminate;
    cert.witness = undecided;
  } else {
    cert.verdict = Verdict::u_shaped;
  }
  return cert;
}

struct GlobalMinimum {
  PrecisionReal location_t;  // 1/sqrt2
  Rational value;            // sum_r a_r (3/4)^r
};

/// Minimum of a U-shaped f, attained at t = 1/sqrt2 where h = 3/4.
inline GlobalMinimum global_min_check(const std::vector<Rational>& a, const Real& tol) {
  if (!(tol > 0)) throw DomainError("global_min_check: tol must be > 0");
  if (ushape_exact(a).verdict != Verdict::u_shaped) {
    throw PreconditionViolation("global_min_check: no u_shaped certificate for these coefficients");
  }
  GlobalMinimum m{sqrt(PrecisionReal(Real(0.5))), Rational(0)};
  if (m.location_t.err_bound() > tol) throw ToleranceUnachievable("global_min_check: tolerance too small");
  Rational q(1);
  for (const auto& ar : a) {
    m.value += ar * q;
    q *= Rational(3, 4);
  }
  if (m.value > 1) throw ValidationError("global minimum exceeds 1: " + m.value.str());
  return m;
}

}  // namespace thetaratio
