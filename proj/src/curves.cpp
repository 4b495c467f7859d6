#include "abtm/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abtm/math.hpp"

namespace abtm {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x < xs.front() || x > xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  if (hi == 0) return ys.front();
  std::size_t lo = hi - 1;
  double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + w * (ys[hi] - ys[lo]);
}

}  // namespace

EffectCurve EffectCurve::zero() { return EffectCurve(Repr{Zero{}}); }

EffectCurve EffectCurve::exponential_decay(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && b >= 0.0,
          "exponential_decay: requires finite a and b >= 0");
  return EffectCurve(Repr{ExpDecay{a, b}});
}

EffectCurve EffectCurve::linear_times_exp(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && b > 0.0,
          "linear_times_exp: requires finite a and b > 0");
  return EffectCurve(Repr{LinExp{a, b}});
}

EffectCurve EffectCurve::gamma_pdf_shape(double shape, double rate, double scale) {
  require(shape > 0.0 && rate > 0.0 && std::isfinite(scale),
          "gamma_pdf_shape: requires shape > 0 and rate > 0");
  double log_norm = shape * std::log(rate) - std::lgamma(shape);
  return EffectCurve(Repr{GammaPdf{shape, rate, scale, log_norm}});
}

EffectCurve EffectCurve::step_constant(double c, double t_end) {
  require(std::isfinite(c) && t_end > 0.0, "step_constant: requires t_end > 0");
  return EffectCurve(Repr{Step{c, t_end}});
}

EffectCurve EffectCurve::tabulated(std::vector<double> grid, std::vector<double> values) {
  require(grid.size() >= 2, "tabulated: need at least two grid points");
  require(grid.size() == values.size(), "tabulated: grid/values size mismatch");
  require(grid.front() >= 0.0, "tabulated: times must be non-negative");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    require(grid[i] > grid[i - 1], "tabulated: grid must be strictly increasing");
  }
  std::vector<double> cum(grid.size(), 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    cum[i] = cum[i - 1] + 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  }
  return EffectCurve(Repr{Tabulated{std::move(grid), std::move(values), std::move(cum)}});
}

double EffectCurve::incremental(double t) const {
  if (t < 0.0) throw std::domain_error("incremental: t must be >= 0");
  return std::visit(
      [t](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, ExpDecay>) {
          return c.a * std::exp(-c.b * t);
        } else if constexpr (std::is_same_v<T, LinExp>) {
          return c.a * t * std::exp(-c.b * t);
        } else if constexpr (std::is_same_v<T, GammaPdf>) {
          if (t == 0.0) {
            if (c.shape > 1.0) return 0.0;
            if (c.shape == 1.0) return c.scale * c.rate;
            return std::numeric_limits<double>::infinity();
          }
          return c.scale * std::exp(c.log_norm + (c.shape - 1.0) * std::log(t) - c.rate * t);
        } else if constexpr (std::is_same_v<T, Step>) {
          return (t > 0.0 && t < c.t_end) ? c.c : 0.0;
        } else {
          return interp(c.grid, c.values, t);
        }
      },
      repr_);
}

double EffectCurve::cumulative(double t) const {
  if (t < 0.0) throw std::domain_error("cumulative: t must be >= 0");
  return std::visit(
      [t](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, ExpDecay>) {
          if (c.b == 0.0) return c.a * t;
          return c.a / c.b * -std::expm1(-c.b * t);
        } else if constexpr (std::is_same_v<T, LinExp>) {
          return c.a / (c.b * c.b) * (1.0 - std::exp(-c.b * t) * (1.0 + c.b * t));
        } else if constexpr (std::is_same_v<T, GammaPdf>) {
          return c.scale * regularized_gamma_p(c.shape, c.rate * t);
        } else if constexpr (std::is_same_v<T, Step>) {
          return c.c * std::min(t, c.t_end);
        } else {
          // Exact integral of the piecewise-linear interpolant; flat outside.
          if (t <= c.grid.front()) return 0.0;
          if (t >= c.grid.back()) return c.cum.back();
          auto it = std::upper_bound(c.grid.begin(), c.grid.end(), t);
          std::size_t hi = static_cast<std::size_t>(it - c.grid.begin());
          std::size_t lo = hi - 1;
          double dt = t - c.grid[lo];
          double v_t = c.values[lo] +
                       (t - c.grid[lo]) / (c.grid[hi] - c.grid[lo]) * (c.values[hi] - c.values[lo]);
          return c.cum[lo] + 0.5 * (c.values[lo] + v_t) * dt;
        }
      },
      repr_);
}

std::string EffectCurve::describe() const {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Zero>) {
          return "zero";
        } else if constexpr (std::is_same_v<T, ExpDecay>) {
          return "exponential_decay(a=" + std::to_string(c.a) + ", b=" + std::to_string(c.b) + ")";
        } else if constexpr (std::is_same_v<T, LinExp>) {
          return "linear_times_exp(a=" + std::to_string(c.a) + ", b=" + std::to_string(c.b) + ")";
        } else if constexpr (std::is_same_v<T, GammaPdf>) {
          return "gamma_pdf_shape(shape=" + std::to_string(c.shape) +
                 ", rate=" + std::to_string(c.rate) + ", scale=" + std::to_string(c.scale) + ")";
        } else if constexpr (std::is_same_v<T, Step>) {
          return "step_constant(c=" + std::to_string(c.c) + ", t_end=" + std::to_string(c.t_end) + ")";
        } else {
          return "tabulated(" + std::to_string(c.grid.size()) + " points)";
        }
      },
      repr_);
}

}  // namespace abtm
