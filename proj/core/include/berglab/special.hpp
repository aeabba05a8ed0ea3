#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace berglab {

/// log Gamma, thin wrapper so call sites read like the formulas.
inline double lgamma_d(double x) { return std::lgamma(x); }

/// Euler Beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
inline double beta_fn(double a, double b) {
  if (a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("beta_fn: arguments must be positive, got a=" +
                                std::to_string(a) + " b=" + std::to_string(b));
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

/// Pochhammer (c)_j = Gamma(c+j)/Gamma(c) in log form; j >= 0.
inline double log_pochhammer(double c, long j) {
  return std::lgamma(c + static_cast<double>(j)) - std::lgamma(c);
}

/// log j!
inline double log_factorial(long j) {
  return std::lgamma(static_cast<double>(j) + 1.0);
}

}  // namespace berglab
