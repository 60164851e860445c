#include "bsl/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bsl {

namespace {
constexpr double kLog2 = 0.69314718055994530942;

void require(bool ok, const char* msg) {
  if (!ok) {
    throw std::invalid_argument(msg);
  }
}
}  // namespace

double entropy_rate(double p, double q) {
  require(p > 0.0 && p < 1.0, "entropy_rate: p must lie in (0, 1)");
  require(q >= 0.0 && q <= 1.0, "entropy_rate: q must lie in [0, 1]");
  double h = 0.0;
  if (q > 0.0) {
    h += q * std::log(p / q);
  }
  if (q < 1.0) {
    h += (1.0 - q) * std::log((1.0 - p) / (1.0 - q));
  }
  return h;
}

double critical_slope(double p) {
  require(p > 0.0 && p <= 0.5, "critical_slope: p must lie in (0, 1/2]");
  if (p == 0.5) {
    return 1.0;
  }
  // H(p, c) + log 2 is positive at c = p+ and negative at c = 1-.
  double lo = p + 1e-9;
  double hi = 1.0 - 1e-15;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (entropy_rate(p, mid) + kLog2 > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double critical_slope_clamped(double p) {
  return p >= 0.5 ? 1.0 : critical_slope(p);
}

double cumulant(double p, double t) { return std::log(1.0 - p + p * std::exp(t)); }

double tilted_mean(double p, double lambda) {
  double w = p * std::exp(lambda);
  return w / (w + 1.0 - p);
}

double lambda_star(double p, double c) {
  require(p > 0.0 && p < 1.0, "lambda_star: p must lie in (0, 1)");
  require(c > p && c < 1.0, "lambda_star: need p < c < 1");
  return std::log(c * (1.0 - p) / (p * (1.0 - c)));
}

double chernoff_tail_bound(double p, double c, std::int64_t n, double beta) {
  require(n >= 0, "chernoff_tail_bound: n must be >= 0");
  require(beta >= 0.0, "chernoff_tail_bound: beta must be >= 0");
  return std::exp(static_cast<double>(n) * entropy_rate(p, c) -
                  lambda_star(p, c) * beta);
}

double p_crit() { return (2.0 - std::sqrt(3.0)) / 4.0; }

double kappa(double p0) {
  require(p0 > 0.0 && p0 < 0.5, "kappa: p0 must lie in (0, 1/2)");
  return std::numbers::pi * std::log(1.0 / (4.0 * p0)) /
         (4.0 * std::sqrt(1.0 - 2.0 * p0));
}

double confinement_bound(double sigma2, double L, std::int64_t N) {
  require(L >= 1.0, "confinement_bound: L must be >= 1");
  require(sigma2 > 0.0 && sigma2 <= 1.0,
          "confinement_bound: sigma2 must lie in (0, 1]");
  double n_min = 9.0 * std::numbers::e * L * L / sigma2;
  if (static_cast<double>(N) <= n_min) {
    throw std::domain_error(
        "confinement_bound: bound not applicable, need N > 9 e L^2 / sigma2");
  }
  return std::exp(-sigma2 * static_cast<double>(N) /
                  (36.0 * std::numbers::e * L * L));
}

double concentration_bound(double alpha, double beta, double beta_prime,
                           std::int64_t T) {
  require(alpha >= 0.0, "concentration_bound: alpha must be >= 0");
  require(beta_prime > beta, "concentration_bound: need beta_prime > beta");
  require(T >= 1, "concentration_bound: T must be >= 1");
  double d = beta_prime - beta;
  return std::min(1.0, alpha / (d * d * static_cast<double>(T)));
}

RateData RateData::for_p(double p) {
  RateData r;
  r.p = p;
  r.c = critical_slope(p);
  r.rate_at_c = entropy_rate(p, r.c);
  if (std::abs(r.rate_at_c + kLog2) > 1e-9) {
    throw std::runtime_error("RateData: rate(c) != -log 2 past tolerance");
  }
  r.lambda_star = p == 0.5 ? std::numeric_limits<double>::infinity()
                           : bsl::lambda_star(p, r.c);
  return r;
}

FiniteLaw FiniteLaw::bernoulli(double p) {
  FiniteLaw law;
  law.atoms = {{0.0, 1.0 - p}, {1.0, p}};
  return law;
}

void FiniteLaw::validate() const {
  require(!atoms.empty(), "FiniteLaw: no atoms");
  double total = 0.0;
  for (const Atom& a : atoms) {
    require(a.probability > 0.0, "FiniteLaw: probabilities must be positive");
    require(std::abs(a.value) <= 1.0, "FiniteLaw: |value| must be <= 1");
    total += a.probability;
  }
  require(std::abs(total - 1.0) <= 1e-12, "FiniteLaw: probabilities must sum to 1");
}

double FiniteLaw::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms) {
    m += a.value * a.probability;
  }
  return m;
}

double FiniteLaw::max_value() const {
  double m = atoms.front().value;
  for (const Atom& a : atoms) {
    m = std::max(m, a.value);
  }
  return m;
}

double FiniteLaw::cgf(double t) const {
  // log-sum-exp over log prob_i + t value_i
  double peak = -std::numeric_limits<double>::infinity();
  for (const Atom& a : atoms) {
    peak = std::max(peak, std::log(a.probability) + t * a.value);
  }
  double acc = 0.0;
  for (const Atom& a : atoms) {
    acc += std::exp(std::log(a.probability) + t * a.value - peak);
  }
  return peak + std::log(acc);
}

double FiniteLaw::tilted_mean(double t) const {
  double norm = cgf(t);
  double m = 0.0;
  for (const Atom& a : atoms) {
    m += a.value * std::exp(std::log(a.probability) + t * a.value - norm);
  }
  return m;
}

double lambda_star(const FiniteLaw& law, double c) {
  require(c > law.mean() && c < law.max_value(),
          "lambda_star: c must lie between the mean and the max atom");
  double lo = 0.0;
  double hi = 1.0;
  while (law.tilted_mean(hi) < c) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw std::runtime_error("lambda_star: tilt out of range");
    }
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * (1.0 + hi); ++iter) {
    double mid = 0.5 * (lo + hi);
    (law.tilted_mean(mid) < c ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double rate(const FiniteLaw& law, double c) {
  double l = lambda_star(law, c);
  return law.cgf(l) - c * l;
}

double critical_slope(const FiniteLaw& law) {
  // rate(c) decreases from 0 at c = mean+ toward -inf at the max atom.
  double lo = law.mean() + 1e-9;
  double hi = law.max_value() - 1e-9;
  if (rate(law, hi) > -kLog2) {
    return law.max_value();  // even the top atom is not rare enough
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    double mid = 0.5 * (lo + hi);
    (rate(law, mid) + kLog2 > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bsl
