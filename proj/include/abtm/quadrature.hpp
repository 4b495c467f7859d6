#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace abtm {

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double best, double err, int segments)
      : std::runtime_error(what), best_estimate(best), error_estimate(err), segments(segments) {}
  double best_estimate;
  double error_estimate;
  int segments;
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  int max_segments = 4000;
};

// Globally adaptive Gauss-Kronrod 15(7) on [lo, hi]: the segment with the
// largest local error estimate is bisected until the summed estimate meets
// max(abs_tol, rel_tol * |integral|). Throws QuadratureError with the best
// estimate attached when the segment budget runs out.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts = {});

}  // namespace abtm
