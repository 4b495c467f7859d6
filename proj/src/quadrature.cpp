#include "abtm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

namespace abtm {
namespace {

// 15-point Kronrod rule with the embedded 7-point Gauss rule (QUADPACK dqk15
// abscissae/weights, positive half).
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double lo, hi;
  double value;  // K15 estimate
  double error;  // |K15 - G7|
  std::uint32_t order;
};

struct SegmentLess {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.order > b.order;  // tie-break by insertion order, keeps runs deterministic
  }
};

Segment evaluate(const std::function<double(double)>& f, double lo, double hi,
                 std::uint32_t order) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss), order};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts) {
  if (!(hi > lo)) return 0.0;

  std::priority_queue<Segment, std::vector<Segment>, SegmentLess> heap;
  std::uint32_t order = 0;
  Segment first = evaluate(f, lo, hi, order++);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);

  int segments = 1;
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (segments >= opts.max_segments) {
      throw QuadratureError(
          "quadrature failed to converge: error estimate " + std::to_string(total_err) +
              " after " + std::to_string(segments) + " segments",
          total, total_err, segments);
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval no longer splittable in double precision; accept its estimate.
      if (heap.empty()) break;
      total_err -= worst.error;
      continue;
    }
    Segment left = evaluate(f, worst.lo, mid, order++);
    Segment right = evaluate(f, mid, worst.hi, order++);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  return total;
}

}  // namespace abtm
