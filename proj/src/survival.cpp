#include "bsl/survival.hpp"

#include <cmath>
#include <stdexcept>

#include "bsl/rate.hpp"
#include "bsl/trials.hpp"

namespace bsl {

std::int64_t slope_threshold(double slope, std::int64_t k) {
  return static_cast<std::int64_t>(
      std::ceil(slope * static_cast<double>(k) - 1e-9));
}

Barrier Barrier::make(double p, double eps, std::int64_t n) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("Barrier: p must lie in (0, 1)");
  }
  if (eps < 0.0) {
    throw std::invalid_argument("Barrier: eps must be >= 0");
  }
  Barrier b;
  b.p = p;
  b.eps = eps;
  b.c = critical_slope_clamped(p);
  b.slope = b.c - eps;
  b.thresholds.resize(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    b.thresholds[static_cast<std::size_t>(k)] = slope_threshold(b.slope, k);
  }
  return b;
}

SurvivalEstimate rho_dp(double p, double eps, std::int64_t n) {
  if (n < 0 || n > kRhoDepthCap) {
    throw std::invalid_argument("rho_dp: n out of range");
  }
  Barrier barrier = Barrier::make(p, eps, n);
  // g[j] = P(a vertex at the current level with path sum j has a surviving
  // continuation to level n). Backward from g == 1 at level n; the root is
  // unconditioned (S(0) = 0 passes t_0 = 0).
  std::size_t width = static_cast<std::size_t>(n) + 2;
  std::vector<double> g(width, 0.0), next(width, 0.0);
  for (std::int64_t j = 0; j <= n; ++j) {
    g[static_cast<std::size_t>(j)] =
        barrier.passes(n, j) ? 1.0 : 0.0;
  }
  for (std::int64_t k = n - 1; k >= 0; --k) {
    std::int64_t t_next = barrier.thresholds[static_cast<std::size_t>(k + 1)];
    for (std::int64_t j = 0; j <= k; ++j) {
      double up = (j + 1 >= t_next) ? g[static_cast<std::size_t>(j + 1)] : 0.0;
      double flat = (j >= t_next) ? g[static_cast<std::size_t>(j)] : 0.0;
      double q = p * up + (1.0 - p) * flat;
      double miss = 1.0 - q;
      next[static_cast<std::size_t>(j)] = 1.0 - miss * miss;
    }
    std::swap(g, next);
  }
  return SurvivalEstimate{g[0], SurvivalMethod::kDp, 0, 0.0};
}

SurvivalEstimate rho_mc(double p, double eps, std::int64_t n,
                        std::int64_t trials, std::uint64_t master_seed,
                        int threads) {
  if (trials < 1) {
    throw std::invalid_argument("rho_mc: trials must be >= 1");
  }
  double slope = critical_slope_clamped(p) - eps;
  std::vector<std::uint8_t> hit = map_indexed<std::uint8_t>(
      trials,
      [&](std::int64_t i) -> std::uint8_t {
        LabelOracle oracle =
            derive_trial_oracle(master_seed, p, static_cast<std::uint64_t>(i));
        return barrier_witness(oracle, VertexId::root(), slope, n,
                               QueryMode::kAudit)
                   .has_value()
                   ? 1
                   : 0;
      },
      threads);
  std::int64_t successes = 0;
  for (std::uint8_t h : hit) {
    successes += h;
  }
  double value = static_cast<double>(successes) / static_cast<double>(trials);
  double se = std::sqrt(value * (1.0 - value) / static_cast<double>(trials));
  return SurvivalEstimate{value, SurvivalMethod::kMc, trials, se};
}

std::optional<std::vector<std::uint8_t>> barrier_witness(LabelOracle& oracle,
                                                         const VertexId& start,
                                                         double slope,
                                                         std::int64_t depth,
                                                         QueryMode mode) {
  if (depth < 0) {
    throw std::invalid_argument("barrier_witness: depth must be >= 0");
  }
  if (depth == 0) {
    return std::vector<std::uint8_t>{};  // the empty path always survives
  }
  std::vector<std::int64_t> thresholds(static_cast<std::size_t>(depth) + 1);
  for (std::int64_t k = 0; k <= depth; ++k) {
    thresholds[static_cast<std::size_t>(k)] = slope_threshold(slope, k);
  }

  struct Frame {
    std::uint64_t state;
    std::int64_t sum;  // relative to start
    int next_bit;
  };
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(depth) + 1);
  stack.push_back(Frame{oracle.state_of(start), 0, 0});
  std::vector<std::uint8_t> path;
  path.reserve(static_cast<std::size_t>(depth));
  VertexId probe = start;  // tracked only for charging

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_bit > 1) {
      stack.pop_back();
      if (!path.empty()) {
        path.pop_back();
        if (mode == QueryMode::kCharged) {
          probe.pop_bit();
        }
      }
      continue;
    }
    int bit = top.next_bit++;
    std::uint64_t state = child_state(top.state, bit);
    std::int64_t sum = top.sum + oracle.label_at_state(state);
    if (mode == QueryMode::kCharged) {
      probe.push_bit(bit);
      oracle.ledger().charge(probe);
      probe.pop_bit();
    }
    std::int64_t level = static_cast<std::int64_t>(stack.size());
    if (sum < thresholds[static_cast<std::size_t>(level)]) {
      continue;  // pruned
    }
    path.push_back(static_cast<std::uint8_t>(bit));
    if (level == depth) {
      return path;
    }
    if (mode == QueryMode::kCharged) {
      probe.push_bit(bit);
    }
    stack.push_back(Frame{state, sum, 0});
  }
  return std::nullopt;
}

double gw_allones_survival(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("gw_allones_survival: n must be >= 0");
  }
  double s = 1.0;
  for (std::int64_t k = 0; k < n; ++k) {
    double z = 1.0 - s;
    double f = (1.0 + z) * 0.5;
    s = 1.0 - f * f;
  }
  return s;
}

namespace {
double period_map(double u, std::int64_t n) {
  // f1^(n-1) composed with f2, in transition order: f2 feeds the period
  // boundary level, f1 the n-1 levels after it.
  double v = u * u;
  for (std::int64_t i = 0; i < n - 1; ++i) {
    double f = (1.0 + v) * 0.5;
    v = f * f;
  }
  return v;
}
}  // namespace

double periodic_gw_survival(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("periodic_gw_survival: n must be >= 2");
  }
  double u = 0.0;
  for (std::int64_t iter = 0; iter < 1000000; ++iter) {
    double next = period_map(u, n);
    if (std::abs(next - u) <= 1e-14) {
      return 1.0 - next;
    }
    u = next;
  }
  throw std::runtime_error(
      "periodic_gw_survival: no fixed point within 1000000 iterations");
}

std::pair<double, double> rho_infinity_bracket(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("rho_infinity_bracket: n must be >= 2");
  }
  return {periodic_gw_survival(n), gw_allones_survival(n - 1)};
}

std::pair<double, double> rho_infinity_bracket_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw std::invalid_argument("rho_infinity_bracket: eps must lie in (0, 1/2]");
  }
  double n_real = 1.0 / eps;
  std::int64_t n = std::llround(n_real);
  if (std::abs(n_real - static_cast<double>(n)) > 1e-9 * n_real) {
    throw std::invalid_argument(
        "rho_infinity_bracket: eps must be the reciprocal of an integer");
  }
  return rho_infinity_bracket(n);
}

}  // namespace bsl
