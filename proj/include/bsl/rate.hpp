#pragma once

#include <cstdint>
#include <vector>

namespace bsl {

// H(p, q) = q log(p/q) + (1-q) log((1-p)/(1-q)); the exponential growth rate
// of log P(S_n >= qn) for an IID Bernoulli(p) sum. Always <= 0, zero iff
// q == p. Endpoints q in {0, 1} use the q log q -> 0 convention.
double entropy_rate(double p, double q);

// The unique c in (p, 1] with H(p, c) + log 2 = 0, by bisection to 1e-12.
// Returns exactly 1.0 at p = 1/2. Pre: p in (0, 1/2].
double critical_slope(double p);

// critical_slope extended to the degenerate test configs p >= 1/2 (c = 1).
double critical_slope_clamped(double p);

// Cumulant generating function of Bernoulli(p): log(1 - p + p e^t).
double cumulant(double p, double t);

// Mean of the exponentially tilted Bernoulli(p): p e^l / (p e^l + 1 - p).
double tilted_mean(double p, double lambda);

// The tilt that shifts the Bernoulli(p) mean to c: log(c(1-p) / (p(1-c))).
// Pre: p < c < 1.
double lambda_star(double p, double c);

// exp(n H(p,c) - lambda_star(p,c) beta); dominates P(S_n >= cn + beta).
double chernoff_tail_bound(double p, double c, std::int64_t n, double beta);

// The Bernoulli parameter with critical slope exactly 1/2: (2 - sqrt 3)/4.
double p_crit();

// pi log(1/(4 p0)) / (4 sqrt(1 - 2 p0)) for p0 in (0, 1/2).
double kappa(double p0);

// exp(-sigma2 N / (36 e L^2)): upper bound on the probability that a
// mean-zero walk with increments bounded by 1 and variance sigma2 stays in
// [-L, L] through step N. Requires L >= 1, 0 < sigma2 <= 1 and
// N > 9 e L^2 / sigma2; otherwise the bound does not apply and we throw.
double confinement_bound(double sigma2, double L, std::int64_t N);

// alpha / ((beta_prime - beta)^2 T), capped at 1: Chebyshev bound on
// P(S_T > beta_prime T) for adapted summands with conditional mean <= beta
// and conditional second moment <= alpha.
double concentration_bound(double alpha, double beta, double beta_prime,
                           std::int64_t T);

// Bundle of the per-p rate quantities with their defining identities checked.
struct RateData {
  double p = 0;
  double c = 0;
  double lambda_star = 0;
  double rate_at_c = 0;  // equals -log 2 by construction

  static RateData for_p(double p);
};

// A finitely supported increment law; kept for the generic rate machinery
// (the survival and search engines are Bernoulli-only).
struct FiniteLaw {
  struct Atom {
    double value = 0;
    double probability = 0;
  };
  std::vector<Atom> atoms;

  static FiniteLaw bernoulli(double p);
  // Validates: probabilities positive and summing to 1 within 1e-12,
  // |value| <= 1.
  void validate() const;

  double mean() const;
  double max_value() const;
  double cgf(double t) const;          // log-sum-exp over atoms
  double tilted_mean(double t) const;  // cgf'(t)
};

// Numeric counterparts of the closed forms above, for any finite law.
double lambda_star(const FiniteLaw& law, double c);
double rate(const FiniteLaw& law, double c);  // cgf(l*) - c l*
double critical_slope(const FiniteLaw& law);  // rate(c) = -log 2

}  // namespace bsl
