#pragma once

#include <cmath>
#include <string>

#include "cmholes/error.hpp"

namespace cmholes {

struct BisectionOptions {
  double xtol = 1e-15;
  // Endpoint accepted as the root when |f| is within this of zero.
  double endpoint_ftol = 0.0;
  int max_iter = 200;
};

// Root of f on [lo, hi]; requires a verified sign change.
template <class F>
double bisect(F&& f, double lo, double hi, const BisectionOptions& opt = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (std::abs(flo) <= opt.endpoint_ftol) return lo;
  if (std::abs(fhi) <= opt.endpoint_ftol) return hi;
  if (std::isnan(flo) || std::isnan(fhi)) throw NumericalFailure("bisection: NaN at bracket ends");
  if ((flo > 0) == (fhi > 0))
    throw NumericalFailure("bisection: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "], f = " + std::to_string(flo) + ", " + std::to_string(fhi));
  for (int it = 0; it < opt.max_iter && hi - lo > opt.xtol * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace cmholes
