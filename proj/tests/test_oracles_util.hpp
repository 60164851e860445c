#pragma once

// Independent brute-force oracles for the tests. These deliberately avoid the
// library's survival/search code paths: enumeration and direct summation
// only, so they can vouch for the fast implementations.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bsl/oracle.hpp"

namespace testor {

inline std::int64_t barrier_threshold(double slope, std::int64_t k) {
  return static_cast<std::int64_t>(
      std::ceil(slope * static_cast<double>(k) - 1e-9));
}

// Exact survival probability for tiny n: enumerate every labeling of the
// complete depth-n tree (2^(2^{n+1}-2) of them), weight by its probability,
// and test path existence directly. Practical for n <= 3.
inline double rho_bruteforce(double p, double slope, int n) {
  if (n == 0) {
    return 1.0;
  }
  int m = (1 << (n + 1)) - 2;  // labeled vertices, depths 1..n
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    bool survives = false;
    for (std::uint32_t leaf = 0; leaf < (1u << n) && !survives; ++leaf) {
      int sum = 0;
      bool good = true;
      for (int d = 1; d <= n; ++d) {
        std::uint32_t prefix = leaf >> (n - d);
        int idx = (1 << d) - 2 + static_cast<int>(prefix);
        sum += static_cast<int>((mask >> idx) & 1u);
        if (sum < barrier_threshold(slope, d)) {
          good = false;
          break;
        }
      }
      survives = good;
    }
    if (survives) {
      int ones = std::popcount(mask);
      total += std::pow(p, ones) * std::pow(1.0 - p, m - ones);
    }
  }
  return total;
}

// Lexicographically least surviving root path of length n, by scanning all
// 2^n paths in order; audit reads only. Empty optional-like: returns "" when
// none survives and n > 0.
inline std::string leftmost_surviving_path(bsl::LabelOracle& oracle,
                                           double slope, int n) {
  for (std::uint32_t leaf = 0; leaf < (1u << n); ++leaf) {
    std::uint64_t st = oracle.root_state();
    int sum = 0;
    bool good = true;
    std::string bits;
    for (int d = 1; d <= n; ++d) {
      int bit = static_cast<int>((leaf >> (n - d)) & 1u);
      st = bsl::child_state(st, bit);
      sum += oracle.label_at_state(st);
      bits.push_back(bit ? '1' : '0');
      if (sum < barrier_threshold(slope, d)) {
        good = false;
        break;
      }
    }
    if (good) {
      return bits;
    }
  }
  return std::string{};
}

// The set of vertices one depth-first segment from the root must charge, in
// charge order: every vertex whose strict ancestors all pass the barrier,
// sorted in prefix-first lexicographic order (preorder).
inline std::vector<std::string> expected_examined_from_root(
    bsl::LabelOracle& oracle, double slope, int n_global) {
  std::vector<std::string> out;
  for (int d = 1; d <= n_global; ++d) {
    for (std::uint32_t path = 0; path < (1u << d); ++path) {
      std::uint64_t st = oracle.root_state();
      int sum = 0;
      bool ancestors_pass = true;
      std::string bits;
      for (int k = 1; k <= d; ++k) {
        int bit = static_cast<int>((path >> (d - k)) & 1u);
        st = bsl::child_state(st, bit);
        sum += oracle.label_at_state(st);
        bits.push_back(bit ? '1' : '0');
        if (k < d && sum < barrier_threshold(slope, k)) {
          ancestors_pass = false;
          break;
        }
      }
      if (ancestors_pass) {
        out.push_back(bits);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// log P(Bin(n, p) >= k0) by direct log-space summation.
inline double log_binomial_tail(int n, double p, int k0) {
  if (k0 <= 0) {
    return 0.0;
  }
  if (k0 > n) {
    return -std::numeric_limits<double>::infinity();
  }
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  for (int k = k0; k <= n; ++k) {
    double lt = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                std::lgamma(n - k + 1.0) + k * std::log(p) +
                (n - k) * std::log(1.0 - p);
    terms.push_back(lt);
    peak = std::max(peak, lt);
  }
  double acc = 0.0;
  for (double lt : terms) {
    acc += std::exp(lt - peak);
  }
  return peak + std::log(acc);
}

// Exact P(Bin(n, p) >= k0) for small n.
inline double binomial_tail(int n, double p, int k0) {
  if (k0 <= 0) {
    return 1.0;
  }
  if (k0 > n) {
    return 0.0;
  }
  return std::exp(log_binomial_tail(n, p, k0));
}

}  // namespace testor
