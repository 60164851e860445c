#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bsl/oracle.hpp"

namespace bsl {

// Integerized barrier test: a partial sum j at level k satisfies the barrier
// iff j >= ceil(slope*k - 1e-9). The 1e-9 slack settles knife-edge levels
// where slope*k sits within floating error of an integer.
std::int64_t slope_threshold(double slope, std::int64_t k);

// The absorbing barrier "S(v_j) >= (c - eps) j" with per-level integer
// thresholds precomputed for levels 0..n.
struct Barrier {
  double p = 0;
  double eps = 0;
  double c = 0;      // critical_slope(p)
  double slope = 0;  // c - eps
  std::vector<std::int64_t> thresholds;

  static Barrier make(double p, double eps, std::int64_t n);
  bool passes(std::int64_t level, std::int64_t sum) const {
    return sum >= thresholds[static_cast<std::size_t>(level)];
  }
};

enum class SurvivalMethod { kDp, kMc, kGf };

struct SurvivalEstimate {
  double value = 0;
  SurvivalMethod method = SurvivalMethod::kDp;
  std::int64_t trials = 0;  // Monte Carlo only
  double stderr_ = 0;       // Monte Carlo only; dp/gf carry 0
};

inline constexpr std::int64_t kRhoDepthCap = 10000;

// Exact survival probability rho(p; eps, n) by a backward dynamic program
// over (level, partial sum) states. O(n^2) time, O(n) space.
SurvivalEstimate rho_dp(double p, double eps, std::int64_t n);

// Monte Carlo estimate over independent per-trial trees; deterministic given
// the seed and aggregated in trial order. threads = 0 picks the runtime
// default, threads = 1 runs the serial reference loop.
SurvivalEstimate rho_mc(double p, double eps, std::int64_t n,
                        std::int64_t trials, std::uint64_t master_seed,
                        int threads = 0);

// Depth-first search below `start` pruned to the set of vertices whose path
// sums relative to start stay above `slope`. Returns the lexicographically
// least relative bit path of length `depth` all of whose prefixes satisfy the
// barrier, or nullopt. Charged mode charges every queried vertex (the strict
// descendants of start that get inspected).
std::optional<std::vector<std::uint8_t>> barrier_witness(LabelOracle& oracle,
                                                         const VertexId& start,
                                                         double slope,
                                                         std::int64_t depth,
                                                         QueryMode mode);

// P(some depth-n all-ones path exists) at p = 1/2: the survival recursion
// s_k = 1 - f(1 - s_{k-1}) with offspring gf f(z) = ((1+z)/2)^2. Equals
// rho(1/2; 0, n).
double gw_allones_survival(std::int64_t n);

// Survival probability of the period-n branching process whose offspring gf
// is ((1+z)/2)^2 off the period boundary and z^2 on it; a lower bound for
// rho(1/2; 1/n, infinity). Fixed-point iteration from 0 to 1e-14.
double periodic_gw_survival(std::int64_t n);

// (lower, upper) bracket for rho(1/2; 1/n, infinity):
// (periodic_gw_survival(n), gw_allones_survival(n-1)); both are Theta(1/n).
std::pair<double, double> rho_infinity_bracket(std::int64_t n);

// Same bracket keyed by eps; eps must be the reciprocal of an integer >= 2.
std::pair<double, double> rho_infinity_bracket_eps(double eps);

}  // namespace bsl
