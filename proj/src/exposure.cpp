#include "abtm/exposure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abtm/quadrature.hpp"

namespace abtm {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

const std::vector<Atom> kNoAtoms;

}  // namespace

ExposureDistribution ExposureDistribution::exponential(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, "exponential: requires lambda > 0");
  return ExposureDistribution(Repr{Exponential{lambda}});
}

ExposureDistribution ExposureDistribution::two_point(std::array<double, 2> times,
                                                     std::array<double, 2> probs) {
  require(times[0] >= 0.0 && times[1] > times[0], "two_point: requires 0 <= t1 < t2");
  require(probs[0] >= 0.0 && probs[1] >= 0.0, "two_point: probabilities must be non-negative");
  require(std::abs(probs[0] + probs[1] - 1.0) <= 1e-12, "two_point: probabilities must sum to 1");
  Discrete d;
  d.atoms = {{times[0], probs[0]}, {times[1], probs[1]}};
  d.label = "two_point";
  return ExposureDistribution(Repr{std::move(d)});
}

ExposureDistribution ExposureDistribution::power_law_density(double exponent, double horizon) {
  require(exponent >= 0.0 && std::isfinite(exponent), "power_law_density: requires exponent >= 0");
  require(horizon > 0.0 && std::isfinite(horizon), "power_law_density: requires horizon > 0");
  return ExposureDistribution(Repr{PowerLaw{exponent, horizon}});
}

ExposureDistribution ExposureDistribution::empirical(std::vector<double> times) {
  require(!times.empty(), "empirical: requires at least one time");
  require(std::is_sorted(times.begin(), times.end()), "empirical: times must be sorted");
  require(times.front() >= 0.0, "empirical: times must be non-negative");
  Discrete d;
  const double mass = 1.0 / static_cast<double>(times.size());
  for (double t : times) {
    if (!d.atoms.empty() && d.atoms.back().time == t) {
      d.atoms.back().mass += mass;
    } else {
      d.atoms.push_back({t, mass});
    }
  }
  d.label = "empirical";
  return ExposureDistribution(Repr{std::move(d)});
}

double ExposureDistribution::cdf(double e) const {
  if (e < 0.0) return 0.0;
  return std::visit(
      [e](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return -std::expm1(-d.lambda * e);
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          if (e >= d.horizon) return 1.0;
          return std::pow(e / d.horizon, d.exponent + 1.0);
        } else {
          double f = 0.0;
          for (const Atom& a : d.atoms) {
            if (a.time <= e) f += a.mass;
          }
          return f;
        }
      },
      repr_);
}

bool ExposureDistribution::is_discrete() const {
  return std::holds_alternative<Discrete>(repr_);
}

const std::vector<Atom>& ExposureDistribution::atoms() const {
  if (const auto* d = std::get_if<Discrete>(&repr_)) return d->atoms;
  return kNoAtoms;
}

double ExposureDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("quantile: u must be in [0, 1)");
  return std::visit(
      [u](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-u) / d.lambda;
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          return d.horizon * std::pow(u, 1.0 / (d.exponent + 1.0));
        } else {
          double acc = 0.0;
          for (const Atom& a : d.atoms) {
            acc += a.mass;
            if (u < acc) return a.time;
          }
          return d.atoms.back().time;
        }
      },
      repr_);
}

std::vector<double> ExposureDistribution::sample(Rng& rng, std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = quantile(rng.uniform01());
  return out;
}

double ExposureDistribution::conditional_mean_below(double t) const {
  const double f = cdf(t);
  if (!(f > 0.0)) {
    throw UndefinedConditionalError("conditional_mean_below: Pr(E <= t) is zero at t = " +
                                    std::to_string(t));
  }
  return std::visit(
      [t, f](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          // Mean of Exp(lambda) truncated to [0, t].
          const double lt = d.lambda * t;
          return (1.0 - (1.0 + lt) * std::exp(-lt)) / (d.lambda * f);
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          const double cap = std::min(t, d.horizon);
          return (d.exponent + 1.0) / (d.exponent + 2.0) * cap;
        } else {
          double m = 0.0;
          for (const Atom& a : d.atoms) {
            if (a.time <= t) m += a.mass * a.time;
          }
          return m / f;
        }
      },
      repr_);
}

double ExposureDistribution::density(double e) const {
  return std::visit(
      [e](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return e < 0.0 ? 0.0 : d.lambda * std::exp(-d.lambda * e);
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          if (e < 0.0 || e > d.horizon) return 0.0;
          return (d.exponent + 1.0) * std::pow(e, d.exponent) /
                 std::pow(d.horizon, d.exponent + 1.0);
        } else {
          throw std::logic_error("density: discrete distribution");
        }
      },
      repr_);
}

double ExposureDistribution::support_upper() const {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          // Tail mass beyond this point is below 1e-16.
          return 36.85 / d.lambda;
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          return d.horizon;
        } else {
          return d.atoms.back().time;
        }
      },
      repr_);
}

double ExposureDistribution::integrate_between(const std::function<double(double)>& g, double lo,
                                               double hi) const {
  if (!(hi > lo)) return 0.0;
  if (const auto* d = std::get_if<Discrete>(&repr_)) {
    double acc = 0.0;
    for (const Atom& a : d->atoms) {
      if (a.time > lo && a.time <= hi) acc += a.mass * g(a.time);
    }
    return acc;
  }
  const double a = std::max(lo, 0.0);
  const double b = std::min(hi, support_upper());
  if (!(b > a)) return 0.0;
  return integrate([this, &g](double e) { return g(e) * density(e); }, a, b);
}

double ExposureDistribution::integrate_against(const std::function<double(double)>& g,
                                               double t) const {
  return integrate_between(g, -1.0, t);
}

std::string ExposureDistribution::describe() const {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return "exponential(lambda=" + std::to_string(d.lambda) + ")";
        } else if constexpr (std::is_same_v<T, PowerLaw>) {
          return "power_law_density(exponent=" + std::to_string(d.exponent) +
                 ", horizon=" + std::to_string(d.horizon) + ")";
        } else {
          return d.label + "(" + std::to_string(d.atoms.size()) + " atoms)";
        }
      },
      repr_);
}

}  // namespace abtm
