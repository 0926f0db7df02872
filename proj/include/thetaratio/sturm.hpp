#pragma once

// Sturm chains over Q. Each remainder is replaced by its primitive part
// (a positive multiple), which leaves every sign in the chain unchanged.

#include "thetaratio/polynomial.hpp"

#include <optional>
#include <vector>

namespace thetaratio {

class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(p));
    if (p.degree() == 0) return;
    chain_.push_back(primitive_part(p.derivative()));
    for (;;) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(primitive_part(-r));
    }
  }

  const std::vector<RationalPolynomial>& polys() const noexcept { return chain_; }

  /// Sign changes of the chain at x, zeros skipped.
  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sign(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct real roots in (a, b]. Exact by Sturm's theorem.
  int count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
  }

 private:
  std::vector<RationalPolynomial> chain_;
};

/// An interval (lo, hi] holding exactly one distinct root.
struct IsolatingInterval {
  Rational lo, hi;
};

/// Isolates every distinct root of p in (a, b] by bisection, each interval
/// narrowed to width <= max_width.
inline std::vector<IsolatingInterval> isolate_roots(const RationalPolynomial& p, const Rational& a,
                                                     const Rational& b, const Rational& max_width) {
  SturmChain sc(p);
  std::vector<IsolatingInterval> out;
  std::vector<IsolatingInterval> todo{{a, b}};
  while (!todo.empty()) {
    auto iv = todo.back();
    todo.pop_back();
    int n = sc.count_roots(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1 && iv.hi - iv.lo <= max_width) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    todo.push_back({mid, iv.hi});
    todo.push_back({iv.lo, mid});
  }
  return out;
}

/// Removes factors t and (1 - t) so that 0 and 1 are not roots.
inline RationalPolynomial deflate_endpoints(RationalPolynomial p) {
  const RationalPolynomial t{Rational(0), Rational(1)};
  const RationalPolynomial one_minus_t{Rational(1), Rational(-1)};
  while (!p.is_zero() && p(Rational(0)) == 0) p = divmod(p, t).first;
  while (!p.is_zero() && p(Rational(1)) == 0) p = divmod(p, one_minus_t).first;
  return p;
}

}  // namespace thetaratio
