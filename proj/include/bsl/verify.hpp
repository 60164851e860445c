#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bsl/report.hpp"

namespace bsl {

struct CheckResult {
  std::string id;        // C1..C14
  std::string name;
  bool pass = false;
  std::string measured;  // deterministic summary, no timings
  std::string expected;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5EED;
  int threads = 0;
  std::ostream* progress = nullptr;  // timing notes; never part of the report
};

// Number of registered checks; the suite refuses to run with any other count.
inline constexpr int kVerifyCheckCount = 14;

std::vector<CheckResult> run_verify_suite(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

// One line per check plus a summary line; byte-stable for a fixed seed.
std::string verify_report_text(const std::vector<CheckResult>& results,
                               std::uint64_t seed);

Table verify_table(const std::vector<CheckResult>& results);

// Golden fixtures: regenerated tables must match the canonical bytes, which
// were produced by an independent implementation of the same pinned formulas.
Table golden_prf_table();
Table golden_survival_table();
const std::string& golden_prf_csv();
const std::string& golden_survival_csv();

}  // namespace bsl
