#pragma once

#include <string>
#include <variant>
#include <vector>

namespace abtm {

// Treatment-effect curve in time since exposure. `incremental` is the
// instantaneous effect rate delta(t); `cumulative` is its integral Delta(t)
// from 0, evaluated in closed form wherever one exists. Times are continuous
// and measured in days; discretization onto daily panels is the simulator's
// concern.
//
// Immutable value type; safe to share across threads.
class EffectCurve {
 public:
  static EffectCurve zero();
  // delta(t) = a * exp(-b t), b >= 0.
  static EffectCurve exponential_decay(double a, double b);
  // delta(t) = a * t * exp(-b t), b > 0.
  static EffectCurve linear_times_exp(double a, double b);
  // delta(t) = scale * rate^shape / Gamma(shape) * t^(shape-1) * exp(-rate t).
  static EffectCurve gamma_pdf_shape(double shape, double rate, double scale);
  // delta(t) = c on (0, t_end), 0 otherwise.
  static EffectCurve step_constant(double c, double t_end);
  // Piecewise-linear interpolation through (grid, values); 0 outside the grid.
  static EffectCurve tabulated(std::vector<double> grid, std::vector<double> values);

  // delta(t); throws std::domain_error for t < 0.
  double incremental(double t) const;

  // Delta(t) = integral of delta over [0, t]; Delta(0) == 0 for every
  // variant. Throws std::domain_error for t < 0.
  double cumulative(double t) const;

  std::string describe() const;

 private:
  struct Zero {};
  struct ExpDecay {
    double a, b;
  };
  struct LinExp {
    double a, b;
  };
  struct GammaPdf {
    double shape, rate, scale;
    double log_norm;  // shape*log(rate) - lgamma(shape)
  };
  struct Step {
    double c, t_end;
  };
  struct Tabulated {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> cum;  // trapezoid integral of the interpolant at each node
  };
  using Repr = std::variant<Zero, ExpDecay, LinExp, GammaPdf, Step, Tabulated>;

  explicit EffectCurve(Repr repr) : repr_(std::move(repr)) {}
  Repr repr_;
};

}  // namespace abtm
