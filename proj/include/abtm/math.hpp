#pragma once

#include <cmath>

namespace abtm {

// Standard normal CDF.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485);
}

// Inverse of the standard normal CDF; p must lie in (0, 1).
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a, x). Stable for large shape
// parameters where factorial-based forms overflow.
double regularized_gamma_p(double a, double x);

}  // namespace abtm
