#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bsl/oracle.hpp"

using bsl::LabelOracle;
using bsl::QueryMode;
using bsl::VertexId;

// Frozen values computed independently from the published mixer chain
// (64-bit wrapping arithmetic, evaluated outside this codebase).
TEST_CASE("PRF states match the independently evaluated chain for seed 42") {
  LabelOracle oracle(42, 0.5);
  CHECK(oracle.root_state() == 0xa759ea27d4727622ull);
  CHECK(oracle.state_of(VertexId::from_bits("0")) == 0x02e27a83ece52600ull);
  CHECK(oracle.state_of(VertexId::from_bits("1")) == 0xcaaa11a11d115903ull);
  CHECK(oracle.state_of(VertexId::from_bits("00")) == 0xf1a28ef588207b02ull);
  CHECK(oracle.state_of(VertexId::from_bits("01")) == 0x4b12d2e28790327eull);
  CHECK(oracle.state_of(VertexId::from_bits("10")) == 0x4f7fee78132b6016ull);
  CHECK(oracle.state_of(VertexId::from_bits("11")) == 0xd66c20c03e0d58aaull);
  CHECK(oracle.state_of(VertexId::from_bits("011")) == 0x6b44f2dc3e237427ull);
  CHECK(oracle.state_of(VertexId::from_bits("111")) == 0xc255a585058bf0c4ull);
}

TEST_CASE("labels are the threshold test u(v) < p") {
  LabelOracle oracle(42, 0.5);
  // u("0") = 0.011268..., u("1") = 0.791657... evaluated independently.
  CHECK(bsl::unit_real(oracle.state_of(VertexId::from_bits("0"))) ==
        doctest::Approx(0.011268288811056681).epsilon(1e-15));
  CHECK(oracle.label(VertexId::from_bits("0"), QueryMode::kAudit) == 1);
  CHECK(oracle.label(VertexId::from_bits("1"), QueryMode::kAudit) == 0);
  CHECK(oracle.label(VertexId::from_bits("01"), QueryMode::kAudit) == 1);
  CHECK(oracle.label(VertexId::from_bits("11"), QueryMode::kAudit) == 0);
}

TEST_CASE("degenerate p = 1 labels everything 1") {
  LabelOracle oracle(123, 1.0);
  VertexId v = VertexId::from_bits("0110");
  CHECK(oracle.label(v, QueryMode::kAudit) == 1);
  CHECK(oracle.path_sum(v, QueryMode::kAudit) == 4);
}

TEST_CASE("path_sum excludes the root and charges the whole path") {
  LabelOracle oracle(42, 0.5);
  CHECK(oracle.path_sum(VertexId::root(), QueryMode::kCharged) == 0);
  CHECK(oracle.ledger().count() == 0);  // the root is never charged

  // Labels of "1", "11", "111" are 0, 0, 0 under seed 42 (independent PRF
  // evaluation), so S("111") = 0.
  CHECK(oracle.path_sum(VertexId::from_bits("111"), QueryMode::kCharged) == 0);
  CHECK(oracle.ledger().count() == 3);

  // Fixtures give labels 1, 1, 1 along "0", "01", "011".
  CHECK(oracle.path_sum(VertexId::from_bits("011"), QueryMode::kAudit) == 3);

  // path_sum equals the sum of the prefix labels, whatever the path.
  VertexId v = VertexId::from_bits("1011010011");
  std::int64_t manual = 0;
  for (std::uint32_t j = 1; j <= v.depth(); ++j) {
    manual += oracle.label(v.ancestor(v.depth() - j), QueryMode::kAudit);
  }
  CHECK(oracle.path_sum(v, QueryMode::kAudit) == manual);
}

TEST_CASE("repeat queries are free and deterministic") {
  LabelOracle oracle(7, 0.5);
  VertexId v = VertexId::from_bits("10110");
  int first = oracle.label(v, QueryMode::kCharged);
  std::int64_t count = oracle.ledger().count();
  CHECK(count == 1);
  int second = oracle.label(v, QueryMode::kCharged);
  CHECK(first == second);
  CHECK(oracle.ledger().count() == count);
  // Audit reads never touch the ledger.
  oracle.label(VertexId::from_bits("0000"), QueryMode::kAudit);
  CHECK(oracle.ledger().count() == count);
}

TEST_CASE("query order and mode do not change values") {
  LabelOracle a(99, 0.3);
  LabelOracle b(99, 0.3);
  VertexId u = VertexId::from_bits("0101");
  VertexId v = VertexId::from_bits("1100");
  int lu_a = a.label(u, QueryMode::kCharged);
  int lv_a = a.label(v, QueryMode::kAudit);
  int lv_b = b.label(v, QueryMode::kCharged);
  int lu_b = b.label(u, QueryMode::kAudit);
  CHECK(lu_a == lu_b);
  CHECK(lv_a == lv_b);
  CHECK(a.path_sum(v, QueryMode::kAudit) == b.path_sum(v, QueryMode::kCharged));
}

TEST_CASE("trial oracles match the independent derivation") {
  LabelOracle t0 = bsl::derive_trial_oracle(42, 0.5, 0);
  LabelOracle t1 = bsl::derive_trial_oracle(42, 0.5, 1);
  LabelOracle t2 = bsl::derive_trial_oracle(42, 0.5, 2);
  CHECK(t0.root_state() == 0xa759ea27d4727622ull);
  CHECK(t1.root_state() == 0xbdd732262feb6e95ull);
  CHECK(t2.root_state() == 0x28efe333b266f103ull);

  // Left-spine labels, frozen from the independent evaluation.
  auto spine = [](LabelOracle& o, int depth) {
    std::vector<int> out;
    VertexId v;
    for (int d = 0; d < depth; ++d) {
      v.push_bit(0);
      out.push_back(o.label(v, QueryMode::kAudit));
    }
    return out;
  };
  CHECK(spine(t0, 6) == std::vector<int>{1, 0, 1, 1, 0, 0});
  CHECK(spine(t1, 6) == std::vector<int>{0, 1, 0, 0, 1, 0});
  CHECK(spine(t2, 6) == std::vector<int>{0, 1, 1, 0, 1, 0});

  // Re-deriving the same trial gives byte-identical label streams.
  LabelOracle t1b = bsl::derive_trial_oracle(42, 0.5, 1);
  CHECK(spine(t1b, 6) == spine(t1, 6));
}

TEST_CASE("ledger cursor and charge agree") {
  LabelOracle oracle(5, 0.5);
  auto& ledger = oracle.ledger();
  auto node = ledger.root_node();
  node = ledger.extend(node, 1);
  CHECK(ledger.charge_node(node));
  CHECK_FALSE(ledger.charge_node(node));
  CHECK(ledger.count() == 1);
  CHECK(ledger.is_charged(VertexId::from_bits("1")));
  CHECK_FALSE(ledger.is_charged(VertexId::from_bits("0")));
  CHECK_FALSE(ledger.is_charged(VertexId::from_bits("11")));
  CHECK(ledger.charge(VertexId::from_bits("11")));
  CHECK_FALSE(ledger.charge(VertexId::from_bits("11")));
  CHECK(ledger.count() == 2);
}

TEST_CASE("statistical sanity: sample mean within 4 standard errors") {
  // 10^6 fresh vertices at depth 20.
  const int kTrials = 1000000;
  const double p = 0.3;
  LabelOracle oracle(20250808, p);
  std::int64_t ones = 0;
  for (int i = 0; i < kTrials; ++i) {
    std::uint64_t st = oracle.root_state();
    for (int k = 19; k >= 0; --k) {
      st = bsl::child_state(st, (i >> k) & 1);
    }
    ones += oracle.label_at_state(st);
  }
  double mean = static_cast<double>(ones) / kTrials;
  double se = std::sqrt(p * (1.0 - p) / kTrials);
  CHECK(std::abs(mean - p) <= 4.0 * se);
}
