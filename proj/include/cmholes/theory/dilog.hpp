#pragma once

#include <cmath>
#include <numbers>

#include "cmholes/error.hpp"

namespace cmholes {

// Li_2(x) on [0, 1]: power series up to 1/2, reflection above.
inline double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainViolation("dilog argument must lie in [0, 1]");
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (x == 0.0) return 0.0;
  if (x == 1.0) return pi2_6;
  auto series = [](double t) {
    double sum = 0.0;
    double power = t;
    for (int k = 1; k < 200; ++k) {
      const double term = power / (static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-18 * sum) break;
      power *= t;
    }
    return sum;
  };
  if (x <= 0.5) return series(x);
  return pi2_6 - std::log(x) * std::log1p(-x) - series(1.0 - x);
}

// E_1(x) = int_x^inf e^-t / t dt for x > 0.
inline double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainViolation("E1 argument must be positive");
  return -std::expint(-x);
}

}  // namespace cmholes
