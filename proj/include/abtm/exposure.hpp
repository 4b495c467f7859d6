#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abtm/rng.hpp"

namespace abtm {

// Conditioning event E <= t has zero probability.
struct UndefinedConditionalError : std::domain_error {
  using std::domain_error::domain_error;
};

// Point mass of a discrete exposure distribution.
struct Atom {
  double time;
  double mass;
};

// Distribution of the exposure time E >= 0. The CDF is the usual
// right-continuous F(e) = Pr(E <= e), and all Stieltjes integrals follow the
// same convention: integrate_against covers [0, t] including any atom at t,
// integrate_between covers the half-open interval (lo, hi]. One integrator
// serves both the discrete variants (atom sums) and the continuous ones
// (adaptive quadrature of g * density at 1e-9 abs / 1e-7 rel tolerance).
//
// Immutable value type; sampling draws from a caller-owned Rng.
class ExposureDistribution {
 public:
  static ExposureDistribution exponential(double lambda);
  static ExposureDistribution two_point(std::array<double, 2> times, std::array<double, 2> probs);
  // Density proportional to t^exponent on [0, horizon].
  static ExposureDistribution power_law_density(double exponent, double horizon);
  // Equal mass 1/n on each listed time (duplicates stack).
  static ExposureDistribution empirical(std::vector<double> times);

  double cdf(double e) const;

  bool is_discrete() const;
  // Atoms in increasing time order; empty for continuous variants.
  const std::vector<Atom>& atoms() const;

  // Inverse CDF at u in [0, 1).
  double quantile(double u) const;

  // n i.i.d. draws via the inverse CDF; deterministic given the Rng state.
  std::vector<double> sample(Rng& rng, std::size_t n) const;

  // E(E | E <= t). Closed form for exponential, two-point, and power-law;
  // atom average for empirical. Throws UndefinedConditionalError when
  // cdf(t) == 0.
  double conditional_mean_below(double t) const;

  // Integral of g against dF over [0, t].
  double integrate_against(const std::function<double(double)>& g, double t) const;

  // Integral of g against dF over (lo, hi].
  double integrate_between(const std::function<double(double)>& g, double lo, double hi) const;

  // Smallest u with cdf(u) == 1, or a negligible-tail cap for the
  // exponential; upper limit for quadrature.
  double support_upper() const;

  std::string describe() const;

 private:
  struct Exponential {
    double lambda;
  };
  struct PowerLaw {
    double exponent, horizon;
  };
  struct Discrete {
    std::vector<Atom> atoms;  // sorted by time
    std::string label;
  };
  using Repr = std::variant<Exponential, PowerLaw, Discrete>;

  explicit ExposureDistribution(Repr repr) : repr_(std::move(repr)) {}

  double density(double e) const;  // continuous variants only

  Repr repr_;
};

}  // namespace abtm
