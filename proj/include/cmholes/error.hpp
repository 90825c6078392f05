#pragma once

#include <stdexcept>
#include <string>

namespace cmholes {

// Argument outside the domain where a quantity is defined (probability > 1,
// alpha beyond alpha_c, odd half-edge total, ...).
struct DomainViolation : std::domain_error {
  using std::domain_error::domain_error;
};

// The degree law has no giant component: hat f'(1) <= 1.
struct Subcritical : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root bracketing, quadrature or ODE integration could not deliver a value.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed experiment configuration or CLI input.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cmholes
