#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsl/report.hpp"
#include "bsl/search.hpp"

namespace bsl {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// A fully reproducible description of one batch run: every output byte is a
// function of this struct.
struct ExperimentConfig {
  std::string command = "rho";  // rho | search | scaling
  double p = 0.5;
  std::vector<double> eps_list = {0.1};
  std::vector<std::int64_t> n_list = {100};
  double r = 0.5;
  double s = 2.0;
  std::string method = "dp";  // rho: dp | mc | gf
  std::string algo = "idfs";  // search: idfs | greedy
  int lookahead = 4;
  std::int64_t trials = 1;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t budget = kDefaultQueryBudget;
  bool record = false;
  int threads = 0;

  std::vector<std::string> echo_comments() const;
  std::string to_json_string() const;
  static ExperimentConfig from_json_string(const std::string& text);
};

// Derives a decorrelated stream seed for a tagged sub-experiment.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag);

Table run_rho(const ExperimentConfig& cfg);
Table run_search(const ExperimentConfig& cfg);
Table run_scaling(const ExperimentConfig& cfg);

// Dispatch on cfg.command; rejects anything it does not know.
Table run_experiment(const ExperimentConfig& cfg);

}  // namespace bsl
