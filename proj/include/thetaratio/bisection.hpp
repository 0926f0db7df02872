#pragma once

#include "thetaratio/config.hpp"
#include "thetaratio/errors.hpp"

#include <optional>

namespace thetaratio {

/// Locates the boundary of a monotone predicate on [lo, hi].
///
/// `below(x)` answers "is x on the low side of the boundary?" and may return
/// nullopt when the evaluation cannot decide (the value is within its own
/// error bound of the target); that point is then taken as the boundary.
/// Requires below(lo) == true and below(hi) == false.
template <class Pred>
Real bisect_boundary(Pred&& below, Real lo, Real hi, const Real& tol, int max_iter = 400) {
  if (!(lo < hi)) throw DomainError("bisection: empty bracket");
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    Real mid = (lo + hi) / 2;
    std::optional<bool> side = below(mid);
    if (!side) return mid;
    if (*side) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace thetaratio
