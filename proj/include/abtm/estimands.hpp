#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abtm/curves.hpp"
#include "abtm/exposure.hpp"

namespace abtm {

// The estimand does not exist at the requested time (no exposed mass).
struct UndefinedEstimandError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation requires a discrete exposure distribution.
struct UnsupportedDistributionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// What a difference-in-means comparison of each measurement rule targets at
// analysis time t, for a given effect curve and exposure distribution.
//
//   cumulative:           integral of Delta(t - e) dF(e) over [0, t] / F(t)
//   windowed:             Delta(nu), independent of the distribution and t
//   cumulative windowed:  [Delta(nu) F(t - nu) + integral over (t - nu, t]
//                          of Delta(t - e) dF(e)] / F(t)
//
// All evaluation is by closed form plus Stieltjes integration; nothing here
// samples, so the Monte Carlo simulator stays an independent check.

double tau_cumulative(const EffectCurve& curve, const ExposureDistribution& dist, double t);

double tau_windowed(const EffectCurve& curve, double nu);

double tau_cumulative_windowed(const EffectCurve& curve, const ExposureDistribution& dist,
                               double nu, double t);

enum class StrategyKind { cumulative, windowed, cumulative_windowed };

std::string strategy_label(StrategyKind kind);

// Estimand evaluated over a time grid. `values[i]` is empty where the
// estimand does not exist (windowed before the window has passed, or no
// exposed mass yet).
struct EstimandCurve {
  StrategyKind strategy;
  std::optional<double> nu;  // set for the windowed kinds
  std::vector<double> times;
  std::vector<std::optional<double>> values;
};

EstimandCurve estimand_curve(const EffectCurve& curve, const ExposureDistribution& dist,
                             StrategyKind strategy, std::optional<double> nu,
                             std::span<const double> grid);

// Weight that the exposure distribution assigns to the cohort exposed at
// atom e when the cumulative estimand at time t is written as a weighted sum
// of cohort effects at times s <= t: Pr(E = e) / F(s) when s == t and e is an
// atom with e <= t, otherwise 0. Discrete distributions only.
double group_time_weight(const ExposureDistribution& dist, double e, double s, double t);

// Time-averaged effect Delta(t) / t.
double tate(const EffectCurve& curve, double t);

// Long-term effect rate delta(t) at a large t.
double lte(const EffectCurve& curve, double t_large);

}  // namespace abtm
