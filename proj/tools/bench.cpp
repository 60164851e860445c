// Benchmark comparing the serial reference loops against the OpenMP kernels
// on the two trial-parallel workloads: Monte Carlo survival estimation and
// batched IDFS runs. Results must be byte-identical; only wall time differs.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "bsl/experiment.hpp"
#include "bsl/report.hpp"
#include "bsl/survival.hpp"
#include "bsl/trials.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Timing {
  double serial = 0;
  double parallel = 0;
  bool identical = false;
};

template <class Fn>
Timing time_both(Fn&& fn) {
  Timing t;
  auto t0 = std::chrono::steady_clock::now();
  std::string serial_out = fn(1);
  t.serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  std::string parallel_out = fn(0);
  t.parallel = seconds_since(t0);
  t.identical = serial_out == parallel_out;
  return t;
}

void report(const char* name, const Timing& t) {
  std::printf("%-24s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n",
              name, t.serial, t.parallel,
              t.parallel > 0 ? t.serial / t.parallel : 0.0,
              t.identical ? "identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads available: %d\n", bsl::hardware_threads());

  std::int64_t mc_trials = quick ? 20000 : 400000;
  Timing mc = time_both([&](int threads) {
    bsl::SurvivalEstimate e =
        bsl::rho_mc(0.5, 0.05, 200, mc_trials, 0xB0B, threads);
    return bsl::format_double17(e.value) + "/" + bsl::format_double17(e.stderr_);
  });
  report("rho_mc p=.5 n=200", mc);

  std::int64_t search_trials = quick ? 8 : 60;
  Timing idfs_batch = time_both([&](int threads) {
    bsl::ExperimentConfig cfg;
    cfg.command = "scaling";
    cfg.p = 0.5;
    cfg.eps_list = {0.05};
    cfg.n_list = {2000};
    cfg.trials = search_trials;
    cfg.seed = 0xB0B;
    cfg.threads = threads;
    return bsl::to_csv(bsl::run_scaling(cfg));
  });
  report("idfs batch n=2000", idfs_batch);

  std::int64_t walk_trials = quick ? 20000 : 200000;
  Timing walks = time_both([&](int threads) {
    std::vector<std::uint8_t> stay = bsl::map_indexed<std::uint8_t>(
        walk_trials,
        [&](std::int64_t i) -> std::uint8_t {
          bsl::LabelOracle oracle = bsl::derive_trial_oracle(0xB0B, 0.5, i);
          std::uint64_t st = oracle.root_state();
          double sum = 0.0;
          for (int k = 0; k < 1000; ++k) {
            st = bsl::child_state(st, 0);
            sum += oracle.label_at_state(st) ? 0.5 : -0.5;
            if (sum > 1.0 || sum < -1.0) {
              return 0;
            }
          }
          return 1;
        },
        threads);
    std::int64_t inside = 0;
    for (auto x : stay) {
      inside += x;
    }
    return std::to_string(inside);
  });
  report("confined walks", walks);

  return (mc.identical && idfs_batch.identical && walks.identical) ? 0 : 1;
}
