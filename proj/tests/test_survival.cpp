#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsl/rate.hpp"
#include "bsl/survival.hpp"
#include "test_oracles_util.hpp"

using namespace bsl;

TEST_CASE("barrier thresholds integerize the real inequality") {
  // p = 1/2, eps = 1/b: every level below b forces all ones.
  Barrier b = Barrier::make(0.5, 0.1, 20);
  CHECK(b.c == 1.0);
  CHECK(b.thresholds[0] == 0);
  for (int k = 1; k < 10; ++k) {
    CHECK(b.thresholds[k] == k);
  }
  CHECK(b.thresholds[10] == 9);
  CHECK(b.passes(10, 9));
  CHECK_FALSE(b.passes(5, 4));

  // Knife-edge: slope*k within floating error of an integer stays inclusive.
  CHECK(slope_threshold(0.3, 10) == 3);
  CHECK(slope_threshold(0.1, 30) == 3);
}

TEST_CASE("rho_dp against the brute-force enumeration oracle") {
  CHECK(rho_dp(0.5, 0.0, 0).value == 1.0);
  CHECK(rho_dp(0.5, 0.0, 1).value == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(rho_dp(0.5, 0.0, 2).value == doctest::Approx(39.0 / 64.0).epsilon(1e-15));

  // The enumeration oracle confirms those rationals independently.
  CHECK(testor::rho_bruteforce(0.5, 1.0, 1) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(testor::rho_bruteforce(0.5, 1.0, 2) ==
        doctest::Approx(39.0 / 64.0).epsilon(1e-12));

  for (int n = 1; n <= 3; ++n) {
    for (auto [p, eps] : {std::pair{0.5, 0.0}, std::pair{0.3, 0.05},
                          std::pair{0.4, 0.1}, std::pair{0.5, 0.34}}) {
      double slope = critical_slope_clamped(p) - eps;
      CHECK(rho_dp(p, eps, n).value ==
            doctest::Approx(testor::rho_bruteforce(p, slope, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("rho_dp monotonicity grid") {
  for (double p : {0.3, 0.4, 0.5}) {
    for (double eps : {0.0, 0.05, 0.1}) {
      double prev = 1.0;
      for (int n : {0, 1, 2, 5, 10, 25, 50}) {
        double v = rho_dp(p, eps, n).value;
        CHECK(v <= prev + 1e-15);  // non-increasing in n
        prev = v;
      }
    }
  }
  for (double p : {0.3, 0.4, 0.5}) {
    double prev = -1.0;
    for (double eps : {0.0, 0.02, 0.05, 0.1, 0.2}) {
      double v = rho_dp(p, eps, 40).value;
      CHECK(v >= prev - 1e-15);  // non-decreasing in eps
      prev = v;
    }
  }
  for (double eps : {0.0, 0.05}) {
    double prev = -1.0;
    for (double p : {0.2, 0.3, 0.4, 0.5}) {
      double v = rho_dp(p, eps, 40).value;
      CHECK(v >= prev - 1e-15);  // non-decreasing in p
      prev = v;
    }
  }
  CHECK_THROWS_AS(rho_dp(0.5, 0.0, kRhoDepthCap + 1), std::invalid_argument);
}

TEST_CASE("gw all-ones recursion matches rho_dp exactly") {
  CHECK(gw_allones_survival(0) == 1.0);
  CHECK(gw_allones_survival(1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(gw_allones_survival(2) == doctest::Approx(39.0 / 64.0).epsilon(1e-15));
  for (int n = 0; n <= 200; ++n) {
    CHECK(std::abs(rho_dp(0.5, 0.0, n).value - gw_allones_survival(n)) <= 1e-12);
  }
}

TEST_CASE("n s_n approaches 4 from below") {
  double prev = 0.0;
  for (int n : {100, 300, 1000}) {
    double ns = n * gw_allones_survival(n);
    CHECK(ns > prev);
    prev = ns;
  }
  double ns1000 = 1000 * gw_allones_survival(1000);
  CHECK(ns1000 >= 3.8);
  CHECK(ns1000 <= 4.0);
}

TEST_CASE("periodic process survival") {
  double s2 = periodic_gw_survival(2);
  // Positive root of u^4 + 2u^2 - 4u + 1 = 0 gives extinction; survival
  // 1 - u ~ 0.704402 (computed by Newton refinement outside this code).
  CHECK(s2 == doctest::Approx(0.704402).epsilon(1e-4));
  CHECK(s2 >= 0.5);
  CHECK(s2 <= gw_allones_survival(1));

  // Fixed-point residual: u* = f1^(n-1)(f2(u*)).
  double u = 1.0 - s2;
  double v = u * u;
  double f = (1.0 + v) * 0.5;
  v = f * f;
  CHECK(std::abs(v - u) <= 1e-12);

  for (int n : {2, 3, 5, 10, 50, 100}) {
    double lower = periodic_gw_survival(n);
    double upper = gw_allones_survival(n - 1);
    CHECK(lower >= 1.0 / n);
    CHECK(lower <= upper + 1e-15);
  }
  CHECK_THROWS_AS(periodic_gw_survival(1), std::invalid_argument);
}

TEST_CASE("infinite-horizon bracket") {
  auto [lo, hi] = rho_infinity_bracket(10);
  CHECK(lo >= 0.1);
  CHECK(lo <= hi);
  auto [lo2, hi2] = rho_infinity_bracket_eps(0.1);
  CHECK(lo2 == lo);
  CHECK(hi2 == hi);
  CHECK(rho_infinity_bracket(100).second / 0.01 <= 5.0);
  CHECK_THROWS_AS(rho_infinity_bracket_eps(0.3), std::invalid_argument);
}

TEST_CASE("barrier_witness basics") {
  LabelOracle ones(1, 1.0);
  auto path = barrier_witness(ones, VertexId::root(), 1.0, 10, QueryMode::kAudit);
  REQUIRE(path.has_value());
  CHECK(path->size() == 10);
  for (auto b : *path) {
    CHECK(b == 0);  // leftmost all-ones path
  }
  CHECK(ones.ledger().count() == 0);  // audit mode left the ledger alone

  auto empty = barrier_witness(ones, VertexId::root(), 1.0, 0, QueryMode::kAudit);
  REQUIRE(empty.has_value());
  CHECK(empty->empty());

  LabelOracle zeros(1, 0.0);
  CHECK_FALSE(barrier_witness(zeros, VertexId::root(), 0.5, 4, QueryMode::kAudit)
                  .has_value());
}

TEST_CASE("barrier_witness matches exhaustive path enumeration") {
  for (std::uint64_t seed : {42ull, 7ull, 1001ull, 555ull, 90210ull}) {
    LabelOracle oracle(seed, 0.5);
    auto got = barrier_witness(oracle, VertexId::root(), 1.0, 5, QueryMode::kAudit);
    std::string expect = testor::leftmost_surviving_path(oracle, 1.0, 5);
    if (expect.empty()) {
      CHECK_FALSE(got.has_value());
    } else {
      REQUIRE(got.has_value());
      std::string got_bits;
      for (auto b : *got) {
        got_bits.push_back(b ? '1' : '0');
      }
      CHECK(got_bits == expect);
    }
  }
}

TEST_CASE("barrier_witness charged mode charges queried descendants only") {
  LabelOracle a(42, 0.5);
  LabelOracle b(42, 0.5);
  auto wa = barrier_witness(a, VertexId::root(), 1.0, 6, QueryMode::kCharged);
  auto wb = barrier_witness(b, VertexId::root(), 1.0, 6, QueryMode::kAudit);
  CHECK(wa == wb);  // mode never changes the value
  CHECK(a.ledger().count() > 0);
  CHECK(b.ledger().count() == 0);
  CHECK_FALSE(a.ledger().is_charged(VertexId::root()));
}

TEST_CASE("rho_mc agrees with rho_dp and is deterministic") {
  SurvivalEstimate dp = rho_dp(0.5, 0.0, 20);
  SurvivalEstimate mc = rho_mc(0.5, 0.0, 20, 20000, 0x5EED);
  CHECK(mc.trials == 20000);
  CHECK(mc.stderr_ ==
        doctest::Approx(std::sqrt(mc.value * (1.0 - mc.value) / 20000)));
  CHECK(std::abs(mc.value - dp.value) <= 4.0 * mc.stderr_);

  SurvivalEstimate again = rho_mc(0.5, 0.0, 20, 20000, 0x5EED);
  CHECK(again.value == mc.value);

  // Serial reference equals the parallel kernel.
  SurvivalEstimate serial = rho_mc(0.5, 0.0, 20, 20000, 0x5EED, 1);
  CHECK(serial.value == mc.value);
}

TEST_CASE("rho_mc with a slack barrier is exactly 1") {
  SurvivalEstimate mc = rho_mc(0.5, 1.5, 10, 500, 99);
  CHECK(mc.value == 1.0);
}

TEST_CASE("finite-depth survival dominates the periodic lower bound") {
  // rho(1/2; 1/n, N) decreases to rho(1/2; 1/n, infinity) >= periodic lower.
  double lower = periodic_gw_survival(10);
  SurvivalEstimate mc = rho_mc(0.5, 0.1, 200, 5000, 0xACE);
  CHECK(lower <= mc.value + 4.0 * mc.stderr_);
}
