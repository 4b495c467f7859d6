#include "abtm/estimands.hpp"

#include <algorithm>
#include <cmath>

namespace abtm {
namespace {

double exposed_mass_or_throw(const ExposureDistribution& dist, double t) {
  const double f = dist.cdf(t);
  if (!(f > 0.0)) {
    throw UndefinedEstimandError("estimand undefined: no exposed mass by t = " +
                                 std::to_string(t));
  }
  return f;
}

}  // namespace

double tau_cumulative(const EffectCurve& curve, const ExposureDistribution& dist, double t) {
  if (t < 0.0) throw std::domain_error("tau_cumulative: t must be >= 0");
  const double f = exposed_mass_or_throw(dist, t);
  const double num = dist.integrate_against(
      [&](double e) { return curve.cumulative(std::max(0.0, t - e)); }, t);
  return num / f;
}

double tau_windowed(const EffectCurve& curve, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("tau_windowed: nu must be > 0");
  return curve.cumulative(nu);
}

double tau_cumulative_windowed(const EffectCurve& curve, const ExposureDistribution& dist,
                               double nu, double t) {
  if (!(nu > 0.0)) throw std::domain_error("tau_cumulative_windowed: nu must be > 0");
  if (t < 0.0) throw std::domain_error("tau_cumulative_windowed: t must be >= 0");
  const double f = exposed_mass_or_throw(dist, t);
  const auto delta_since = [&](double e) { return curve.cumulative(std::max(0.0, t - e)); };
  // Units exposed by t - nu contribute the full window; later units are still
  // accumulating. For t <= nu this reduces to the plain cumulative estimand.
  if (t - nu >= 0.0) {
    const double capped = tau_windowed(curve, nu) * dist.cdf(t - nu);
    const double growing = dist.integrate_between(delta_since, t - nu, t);
    return (capped + growing) / f;
  }
  return dist.integrate_against(delta_since, t) / f;
}

std::string strategy_label(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::cumulative:
      return "cumulative";
    case StrategyKind::windowed:
      return "windowed";
    case StrategyKind::cumulative_windowed:
      return "cumulative_windowed";
  }
  return "unknown";
}

EstimandCurve estimand_curve(const EffectCurve& curve, const ExposureDistribution& dist,
                             StrategyKind strategy, std::optional<double> nu,
                             std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("estimand_curve: grid must be sorted ascending");
  }
  if (strategy != StrategyKind::cumulative && !nu.has_value()) {
    throw std::invalid_argument("estimand_curve: windowed strategies need nu");
  }
  EstimandCurve out;
  out.strategy = strategy;
  out.nu = (strategy == StrategyKind::cumulative) ? std::nullopt : nu;
  out.times.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double t : grid) {
    std::optional<double> v;
    switch (strategy) {
      case StrategyKind::cumulative:
        if (dist.cdf(t) > 0.0) v = tau_cumulative(curve, dist, t);
        break;
      case StrategyKind::windowed:
        if (t > *nu) v = tau_windowed(curve, *nu);
        break;
      case StrategyKind::cumulative_windowed:
        if (dist.cdf(t) > 0.0) v = tau_cumulative_windowed(curve, dist, *nu, t);
        break;
    }
    out.values.push_back(v);
  }
  return out;
}

double group_time_weight(const ExposureDistribution& dist, double e, double s, double t) {
  if (!dist.is_discrete()) {
    throw UnsupportedDistributionError(
        "group_time_weight: defined for discrete exposure distributions only");
  }
  const double f = dist.cdf(s);
  if (!(f > 0.0)) throw std::domain_error("group_time_weight: F(s) must be > 0");
  if (s != t) return 0.0;
  for (const Atom& a : dist.atoms()) {
    if (a.time == e && a.time <= t) return a.mass / f;
  }
  return 0.0;
}

double tate(const EffectCurve& curve, double t) {
  if (!(t > 0.0)) throw std::domain_error("tate: t must be > 0");
  return curve.cumulative(t) / t;
}

double lte(const EffectCurve& curve, double t_large) {
  if (!(t_large > 0.0)) throw std::domain_error("lte: t must be > 0");
  return curve.incremental(t_large);
}

}  // namespace abtm
