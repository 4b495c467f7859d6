#include "abtm/math.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <stdexcept>

namespace abtm {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must be in (0, 1)");
  }
  static const boost::math::normal_distribution<double> dist;
  return boost::math::quantile(dist, p);
}

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw std::domain_error("regularized_gamma_p: requires a > 0 and x >= 0");
  }
  return boost::math::gamma_p(a, x);
}

}  // namespace abtm
