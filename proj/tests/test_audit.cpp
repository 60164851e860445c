#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Accounting-scheme properties replayed over recorded IDFS runs at p = 1/2:
// the per-step good-vertex mean stays below the 4*eps-style ceiling, and a
// successful run must have marked nearly half the witness depth.

#include <cstdint>
#include <vector>

#include "bsl/oracle.hpp"
#include "bsl/search.hpp"
#include "bsl/survival.hpp"
#include "bsl/trials.hpp"

using namespace bsl;

namespace {
constexpr double kEps = 0.05;
constexpr std::int64_t kB = 10;  // eps = 1/(2b)
}  // namespace

TEST_CASE("mean good-set size stays below 1.5 * 4 * eps over 100 runs") {
  const std::int64_t kRuns = 100;
  const std::int64_t kN = 1000;
  struct RunStat {
    std::int64_t total = 0;
    std::int64_t steps = 0;
  };
  std::vector<RunStat> stats = map_indexed<RunStat>(kRuns, [&](std::int64_t i) {
    LabelOracle oracle = derive_trial_oracle(0xA0D17, 0.5, i);
    SearchOutcome out =
        idfs(oracle, kEps, 0.5, kN, kDefaultQueryBudget, /*record=*/true);
    std::vector<std::int64_t> sizes =
        audit_good_sets(oracle, out.examined_order, kB);
    RunStat s;
    for (std::int64_t v : sizes) {
      s.total += v;
    }
    s.steps = static_cast<std::int64_t>(sizes.size());
    return s;
  });
  std::int64_t total = 0, steps = 0;
  for (const RunStat& s : stats) {
    total += s.total;
    steps += s.steps;
  }
  REQUIRE(steps > 0);
  double mean = static_cast<double>(total) / static_cast<double>(steps);
  MESSAGE("mean |A(t)| = ", mean);
  CHECK(mean <= 4.0 * kEps * 1.5);
}

TEST_CASE("successful runs mark at least n/2 - b good vertices") {
  const std::int64_t kN = 2000;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 6 && checked < 3; ++seed) {
    LabelOracle oracle = derive_trial_oracle(0xE52, 0.5, seed);
    SearchOutcome out =
        idfs(oracle, kEps, 0.5, kN, kDefaultQueryBudget, /*record=*/true);
    if (!out.success) {
      continue;
    }
    ++checked;
    std::vector<std::int64_t> sizes =
        audit_good_sets(oracle, out.examined_order, kB);
    std::int64_t total = 0;
    for (std::int64_t v : sizes) {
      total += v;
    }
    CHECK(total >= kN / 2 - kB);
  }
  CHECK(checked == 3);
}
