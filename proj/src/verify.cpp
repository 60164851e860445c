#include "bsl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "bsl/experiment.hpp"
#include "bsl/oracle.hpp"
#include "bsl/rate.hpp"
#include "bsl/search.hpp"
#include "bsl/survival.hpp"
#include "bsl/trials.hpp"
#include "golden_data.hpp"

namespace bsl {

namespace {

struct WitnessTrial {
  std::uint8_t success = 0;
  std::int64_t queries = 0;
  std::int64_t good_count = 0;
  std::int64_t witness_sum = 0;
};

struct Ctx {
  VerifyOptions opt;
  // Criterion 11 search outcomes, reused by criterion 13.
  std::vector<WitnessTrial> witnesses;
  std::vector<std::int64_t> success_queries;
  bool searches_ran = false;
};

std::string fmt(double x) { return format_double17(x); }

std::string hex64(std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(x));
  return buf;
}

// Exact log P(Bin(n, p) >= k0), summed directly; the oracle side of the
// Chernoff comparisons.
double log_binom_tail(int n, double p, int k0) {
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

// Exhaustive survival probability for tiny depths: every labeling of the
// complete depth-n tree, probability-weighted. Independent of rho_dp.
double rho_enumerated(double p, double slope, int n) {
  if (n == 0) {
    return 1.0;
  }
  int m = (1 << (n + 1)) - 2;
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
        if (sum < slope_threshold(slope, d)) {
          good = false;
          break;
        }
      }
      survives = good;
    }
    if (survives) {
      int ones = 0;
      for (int i = 0; i < m; ++i) {
        ones += static_cast<int>((mask >> i) & 1u);
      }
      total += std::pow(p, ones) * std::pow(1.0 - p, m - ones);
    }
  }
  return total;
}

CheckResult check_constants(Ctx&) {
  CheckResult r{"C1", "closed-form-constants", false, "", ""};
  double pc = p_crit();
  double d1 = std::abs(pc - 0.066987298107780677);  // digits frozen offline
  double d2 = std::abs(16.0 * pc * (1.0 - pc) - 1.0);
  double d3 = std::abs(critical_slope(pc) - 0.5);
  bool half_exact = critical_slope(0.5) == 1.0;
  r.pass = d1 <= 1e-15 && d2 <= 1e-12 && d3 <= 1e-9 && half_exact;
  r.measured = "|dp_crit|=" + fmt(d1) + ";|d16p|=" + fmt(d2) +
               ";|dc(p_crit)|=" + fmt(d3) +
               ";c(1/2)=" + (half_exact ? std::string("1") : std::string("!1"));
  r.expected = "<=1e-15;<=1e-12;<=1e-9;exact 1";
  return r;
}

CheckResult check_rate_identities(Ctx&) {
  CheckResult r{"C2", "rate-identities", false, "", ""};
  double worst_identity = 0.0, worst_mean = 0.0;
  for (double p = 0.05; p <= 0.45 + 1e-12; p += 0.05) {
    for (double c = p + 0.05; c <= 0.95 + 1e-12; c += 0.05) {
      double l = lambda_star(p, c);
      worst_identity = std::max(
          worst_identity, std::abs(cumulant(p, l) - c * l - entropy_rate(p, c)));
      worst_mean = std::max(worst_mean, std::abs(tilted_mean(p, l) - c));
    }
  }
  r.pass = worst_identity <= 1e-10 && worst_mean <= 1e-12;
  r.measured = "max|phi-cl-H|=" + fmt(worst_identity) +
               ";max|mean-c|=" + fmt(worst_mean);
  r.expected = "<=1e-10;<=1e-12";
  return r;
}

CheckResult check_chernoff(Ctx&) {
  CheckResult r{"C3", "chernoff-domination", false, "", ""};
  double worst = -std::numeric_limits<double>::infinity();
  for (double p : {0.1, 0.3}) {
    for (double c : {0.5, 0.7}) {
      for (double beta : {0.0, 1.0, 2.0}) {
        for (int n = 0; n <= 30; ++n) {
          int k0 = static_cast<int>(std::ceil(c * n + beta - 1e-9));
          double exact = k0 > n ? 0.0 : std::exp(log_binom_tail(n, p, k0));
          double bound = chernoff_tail_bound(p, c, n, beta);
          worst = std::max(worst, exact - bound);
        }
      }
    }
  }
  r.pass = worst <= 1e-15;
  r.measured = "max(exact-bound)=" + fmt(worst);
  r.expected = "<=0 (1e-15 slack)";
  return r;
}

CheckResult check_survival_oracles(Ctx&) {
  CheckResult r{"C4", "survival-oracles-agree", false, "", ""};
  double worst = 0.0;
  for (int n = 0; n <= 200; ++n) {
    worst = std::max(
        worst, std::abs(rho_dp(0.5, 0.0, n).value - gw_allones_survival(n)));
  }
  double brute1 = rho_enumerated(0.5, 1.0, 1);
  double brute2 = rho_enumerated(0.5, 1.0, 2);
  double d1 = std::abs(rho_dp(0.5, 0.0, 1).value - brute1);
  double d2 = std::abs(rho_dp(0.5, 0.0, 2).value - brute2);
  bool exact = brute1 == 0.75 && brute2 == 39.0 / 64.0 && d1 == 0.0 && d2 == 0.0;
  r.pass = worst <= 1e-12 && exact;
  r.measured = "max|dp-gw|=" + fmt(worst) + ";brute1=" + fmt(brute1) +
               ";brute2=" + fmt(brute2);
  r.expected = "<=1e-12;0.75 and 39/64 exactly";
  return r;
}

CheckResult check_allones_constant(Ctx&) {
  CheckResult r{"C5", "allones-survival-constant", false, "", ""};
  double prev = 0.0;
  bool increasing = true;
  std::string series;
  for (int n : {100, 300, 1000}) {
    double ns = n * gw_allones_survival(n);
    increasing = increasing && ns > prev;
    prev = ns;
    if (!series.empty()) {
      series += ",";
    }
    series += fmt(ns);
  }
  double at1000 = 1000 * gw_allones_survival(1000);
  r.pass = increasing && at1000 >= 3.8 && at1000 <= 4.0;
  r.measured = "n*s_n=" + series;
  r.expected = "increasing; in [3.8,4.0] at n=1000 (stated constant: 2)";
  return r;
}

CheckResult check_periodic_bracket(Ctx&) {
  CheckResult r{"C6", "periodic-bracket", false, "", ""};
  bool ok = true;
  double worst_ratio = 0.0;
  for (int n : {2, 5, 10, 100}) {
    auto [lo, hi] = rho_infinity_bracket(n);
    ok = ok && lo >= 1.0 / n && lo <= hi;
    worst_ratio = std::max(worst_ratio, hi / lo);
  }
  ok = ok && worst_ratio <= 5.0;
  r.pass = ok;
  r.measured = "max upper/lower=" + fmt(worst_ratio);
  r.expected = "lower>=1/n; lower<=upper; ratio<=5";
  return r;
}

CheckResult check_mc_vs_dp(Ctx& ctx) {
  CheckResult r{"C7", "mc-vs-dp", false, "", ""};
  struct Cfg {
    double p, eps;
    std::int64_t n;
  };
  const Cfg cfgs[] = {{0.5, 0.0, 20}, {0.5, 0.1, 50}, {0.3, 0.05, 50}};
  bool ok = true;
  std::string detail;
  int tag = 70;
  for (const Cfg& c : cfgs) {
    SurvivalEstimate dp = rho_dp(c.p, c.eps, c.n);
    SurvivalEstimate mc = rho_mc(c.p, c.eps, c.n, 100000,
                                 sub_seed(ctx.opt.seed, tag++), ctx.opt.threads);
    double gap = std::abs(mc.value - dp.value);
    ok = ok && gap <= 4.0 * mc.stderr_;
    if (!detail.empty()) {
      detail += ";";
    }
    detail += "gap/se=" + fmt(mc.stderr_ > 0 ? gap / mc.stderr_ : 0.0);
  }
  r.pass = ok;
  r.measured = detail;
  r.expected = "|mc-dp|<=4*stderr each";
  return r;
}

CheckResult check_deep_barrier_decay(Ctx&) {
  CheckResult r{"C8", "deep-barrier-decay", false, "", ""};
  double worst = -std::numeric_limits<double>::infinity();
  for (double eps : {0.04, 0.02, 0.01}) {
    auto depth = static_cast<std::int64_t>(
        std::ceil(std::pow(eps, -1.5) - 1e-9));
    double rho = rho_dp(0.3, eps, depth).value;
    worst = std::max(worst, std::sqrt(eps) * std::log(rho));
  }
  r.pass = worst <= -0.01;
  r.measured = "max sqrt(eps)*log rho=" + fmt(worst);
  r.expected = "<=-0.01";
  return r;
}

CheckResult check_scaling_band(Ctx& ctx) {
  CheckResult r{"C9", "scaling-band", false, "", ""};
  ExperimentConfig cfg;
  cfg.command = "scaling";
  cfg.p = 0.5;
  cfg.r = 0.5;
  cfg.eps_list = {0.05, 0.1, 0.2};
  cfg.n_list = {2000};
  cfg.trials = 100;
  cfg.seed = sub_seed(ctx.opt.seed, 9);
  cfg.threads = ctx.opt.threads;
  Table t = run_scaling(cfg);
  std::size_t rate_col = t.column_index("success_rate");
  std::size_t ratio_col = t.column_index("ratio_q_eps_n");
  double min_rate = 1.0, lo = 1e300, hi = 0.0;
  for (const auto& row : t.rows) {
    min_rate = std::min(min_rate, cell_to_double(row[rate_col]));
    double ratio = cell_to_double(row[ratio_col]);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  double band = hi / lo;
  r.pass = min_rate >= 0.9 && band <= 3.0;
  r.measured = "min_rate=" + fmt(min_rate) + ";band=" + fmt(band);
  r.expected = "rate>=0.9; max/min ratio<=3";
  return r;
}

CheckResult check_budget_trend(Ctx& ctx) {
  CheckResult r{"C10", "budget-trend", false, "", ""};
  const double eps = 0.05, kappa_param = 0.25, rr = 0.5;
  const std::int64_t trials = 200;
  std::vector<double> freq, freq_quarter;
  int tag = 100;
  for (std::int64_t n : {500, 1000, 2000, 4000}) {
    std::int64_t budget = critical_search_budget(eps, n, kappa_param);
    std::uint64_t master = sub_seed(ctx.opt.seed, tag++);
    struct Res {
      std::uint8_t success;
      std::int64_t queries;
    };
    std::vector<Res> out = map_indexed<Res>(
        trials,
        [&](std::int64_t i) {
          LabelOracle oracle =
              derive_trial_oracle(master, 0.5, static_cast<std::uint64_t>(i));
          SearchOutcome so = idfs(oracle, eps, rr, n, budget);
          return Res{static_cast<std::uint8_t>(so.success ? 1 : 0), so.queries};
        },
        ctx.opt.threads);
    std::int64_t wins = 0, quarter_wins = 0;
    for (const Res& res : out) {
      wins += res.success;
      // A run that succeeded using <= budget/4 queries would also have
      // succeeded under the quarter budget (identical deterministic course).
      quarter_wins += (res.success && res.queries <= budget / 4) ? 1 : 0;
    }
    freq.push_back(static_cast<double>(wins) / trials);
    freq_quarter.push_back(static_cast<double>(quarter_wins) / trials);
  }
  int inversions = 0;
  for (std::size_t i = 0; i + 1 < freq.size(); ++i) {
    if (freq[i + 1] > freq[i]) {
      ++inversions;
    }
  }
  r.pass = inversions <= 1;
  std::string f, fq;
  for (std::size_t i = 0; i < freq.size(); ++i) {
    if (i) {
      f += ",";
      fq += ",";
    }
    f += fmt(freq[i]);
    fq += fmt(freq_quarter[i]);
  }
  r.measured = "freq=" + f + ";freq@T/4=" + fq +
               ";inversions=" + std::to_string(inversions);
  r.expected = "non-increasing over n=500..4000, <=1 adjacent inversion";
  return r;
}

void run_witness_searches(Ctx& ctx) {
  if (ctx.searches_ran) {
    return;
  }
  const double p = 0.3, eps = 0.05, rr = 0.5, s = 2.0;
  const std::int64_t n = 10000;
  const int kWanted = 20;
  const int kMaxTrials = 96;
  std::uint64_t master = sub_seed(ctx.opt.seed, 11);
  std::vector<WitnessTrial> results;
  int next = 0, successes = 0;
  while (successes < kWanted && next < kMaxTrials) {
    int chunk = std::min(8, kMaxTrials - next);
    std::vector<WitnessTrial> block = map_indexed<WitnessTrial>(
        chunk,
        [&](std::int64_t i) {
          LabelOracle oracle = derive_trial_oracle(
              master, p, static_cast<std::uint64_t>(next + i));
          SearchOutcome so = idfs(oracle, eps, rr, n);
          WitnessTrial w;
          w.success = so.success ? 1 : 0;
          w.queries = so.queries;
          w.witness_sum = so.witness_sum;
          if (so.success) {
            std::vector<std::uint8_t> labels = path_labels(oracle, *so.witness);
            w.good_count = red_blue_color(labels, p, s, eps).good_count;
          }
          return w;
        },
        ctx.opt.threads);
    for (const WitnessTrial& w : block) {
      results.push_back(w);
      successes += w.success;
    }
    next += chunk;
  }
  // Keep the first 20 successes in trial order.
  ctx.success_queries.clear();
  ctx.witnesses.clear();
  for (const WitnessTrial& w : results) {
    if (w.success && static_cast<int>(ctx.witnesses.size()) < kWanted) {
      ctx.witnesses.push_back(w);
      ctx.success_queries.push_back(w.queries);
    }
  }
  ctx.searches_ran = true;
}

CheckResult check_witness_good_count(Ctx& ctx) {
  CheckResult r{"C11", "witness-good-count", false, "", ""};
  run_witness_searches(ctx);
  const double p = 0.3, eps = 0.05, s = 2.0;
  const std::int64_t n = 10000;
  double c = critical_slope(p);
  auto floor_bound = static_cast<std::int64_t>(std::floor(
      (s - 1.0) / (2.0 * (1.0 - c)) * static_cast<double>(n) *
      std::pow(eps, 2.5)));
  std::int64_t min_good = std::numeric_limits<std::int64_t>::max();
  for (const WitnessTrial& w : ctx.witnesses) {
    min_good = std::min(min_good, w.good_count);
  }
  bool enough = static_cast<int>(ctx.witnesses.size()) == 20;
  r.pass = enough && min_good >= floor_bound;
  r.measured = "successes=" + std::to_string(ctx.witnesses.size()) +
               ";min_good=" +
               (enough ? std::to_string(min_good) : std::string("n/a"));
  r.expected = ">=floor bound " + std::to_string(floor_bound) +
               " on 20 witnesses";
  return r;
}

CheckResult check_bounds_dominate(Ctx& ctx) {
  CheckResult r{"C12", "probability-bounds-dominate", false, "", ""};
  const std::int64_t kTrials = 100000;
  double worst = -1.0;
  int tag = 120;
  int configs = 0;

  // Confinement: compensated Bernoulli(q) walks in [-L, L].
  struct Conf {
    double q, L;
    std::int64_t N;
  };
  const Conf confs[] = {
      {0.5, 1.0, 120}, {0.5, 1.0, 360},  {0.5, 1.5, 240}, {0.5, 1.5, 720},
      {0.3, 1.0, 140}, {0.3, 1.0, 420},  {0.3, 1.5, 300}, {0.3, 1.5, 900},
      {0.1, 1.0, 300}, {0.1, 1.0, 900},  {0.1, 1.5, 700}, {0.1, 1.5, 2100}};
  for (const Conf& c : confs) {
    double sigma2 = c.q * (1.0 - c.q);
    double bound = confinement_bound(sigma2, c.L, c.N);
    std::uint64_t master = sub_seed(ctx.opt.seed, tag++);
    std::vector<std::uint8_t> stay = map_indexed<std::uint8_t>(
        kTrials,
        [&](std::int64_t i) -> std::uint8_t {
          LabelOracle oracle =
              derive_trial_oracle(master, c.q, static_cast<std::uint64_t>(i));
          std::uint64_t st = oracle.root_state();
          double sum = 0.0;
          for (std::int64_t k = 0; k < c.N; ++k) {
            st = child_state(st, 0);
            sum += oracle.label_at_state(st) ? (1.0 - c.q) : -c.q;
            if (std::abs(sum) > c.L) {
              return 0;
            }
          }
          return 1;
        },
        ctx.opt.threads);
    std::int64_t cnt = 0;
    for (std::uint8_t x : stay) {
      cnt += x;
    }
    worst = std::max(worst, static_cast<double>(cnt) / kTrials - bound);
    ++configs;
  }

  // Adapted-sum concentration: IID Bernoulli(beta), alpha = E X^2 = beta.
  struct Conc {
    double beta, beta_prime;
    std::int64_t T;
  };
  const Conc concs[] = {{0.2, 0.4, 200},  {0.2, 0.3, 400}, {0.5, 0.7, 100},
                        {0.1, 0.3, 150},  {0.3, 0.5, 250}, {0.4, 0.6, 300},
                        {0.25, 0.5, 120}, {0.5, 0.8, 80}};
  for (const Conc& c : concs) {
    double bound = concentration_bound(c.beta, c.beta, c.beta_prime, c.T);
    std::uint64_t master = sub_seed(ctx.opt.seed, tag++);
    std::vector<std::uint8_t> hit = map_indexed<std::uint8_t>(
        kTrials,
        [&](std::int64_t i) -> std::uint8_t {
          LabelOracle oracle = derive_trial_oracle(
              master, c.beta, static_cast<std::uint64_t>(i));
          std::uint64_t st = oracle.root_state();
          std::int64_t sum = 0;
          for (std::int64_t k = 0; k < c.T; ++k) {
            st = child_state(st, 0);
            sum += oracle.label_at_state(st);
          }
          return static_cast<double>(sum) >
                         c.beta_prime * static_cast<double>(c.T)
                     ? 1
                     : 0;
        },
        ctx.opt.threads);
    std::int64_t cnt = 0;
    for (std::uint8_t x : hit) {
      cnt += x;
    }
    worst = std::max(worst, static_cast<double>(cnt) / kTrials - bound);
    ++configs;
  }

  r.pass = worst <= 0.0 && configs == 20;
  r.measured = "configs=" + std::to_string(configs) +
               ";max(empirical-bound)=" + fmt(worst);
  r.expected = "20 configs; empirical <= bound";
  return r;
}

CheckResult check_search_floor(Ctx& ctx) {
  CheckResult r{"C13", "search-floor", false, "", ""};
  run_witness_searches(ctx);
  double budget = subcritical_search_budget(0.3, 2.0, 0.05, 10000);
  std::int64_t min_queries = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t q : ctx.success_queries) {
    min_queries = std::min(min_queries, q);
  }
  bool enough = ctx.success_queries.size() == 20;
  r.pass = enough && static_cast<double>(min_queries) >= budget;
  r.measured = "min_queries=" +
               (enough ? std::to_string(min_queries) : std::string("n/a")) +
               ";floor=" + fmt(budget);
  r.expected = "every successful search >= the subcritical budget floor";
  return r;
}

CheckResult check_determinism(Ctx& ctx) {
  CheckResult r{"C14", "determinism-fixtures", false, "", ""};
  bool prf_ok = to_csv(golden_prf_table()) == golden_prf_csv();
  bool surv_ok = to_csv(golden_survival_table()) == golden_survival_csv();

  // Same-process rerun canary with the pinned seed 7.
  ExperimentConfig rho_cfg;
  rho_cfg.command = "rho";
  rho_cfg.method = "mc";
  rho_cfg.p = 0.5;
  rho_cfg.eps_list = {0.1};
  rho_cfg.n_list = {30};
  rho_cfg.trials = 2000;
  rho_cfg.seed = 7;
  rho_cfg.threads = ctx.opt.threads;
  ExperimentConfig search_cfg;
  search_cfg.command = "search";
  search_cfg.p = 0.5;
  search_cfg.eps_list = {0.1};
  search_cfg.n_list = {300};
  search_cfg.trials = 3;
  search_cfg.seed = 7;
  search_cfg.threads = ctx.opt.threads;
  bool rerun_ok =
      to_csv(run_experiment(rho_cfg)) == to_csv(run_experiment(rho_cfg)) &&
      to_json(run_experiment(search_cfg)) == to_json(run_experiment(search_cfg));

  r.pass = prf_ok && surv_ok && rerun_ok;
  r.measured = std::string("prf=") + (prf_ok ? "match" : "MISMATCH") +
               ";survival=" + (surv_ok ? "match" : "MISMATCH") +
               ";rerun=" + (rerun_ok ? "match" : "MISMATCH");
  r.expected = "golden fixtures and reruns byte-identical";
  return r;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyOptions& options) {
  Ctx ctx;
  ctx.opt = options;
  using Fn = std::function<CheckResult(Ctx&)>;
  const std::vector<Fn> checks = {
      check_constants,     check_rate_identities,    check_chernoff,
      check_survival_oracles, check_allones_constant, check_periodic_bracket,
      check_mc_vs_dp,      check_deep_barrier_decay, check_scaling_band,
      check_budget_trend,  check_witness_good_count, check_bounds_dominate,
      check_search_floor,  check_determinism,
  };
  if (static_cast<int>(checks.size()) != kVerifyCheckCount) {
    throw std::logic_error("verify: check registry does not match manifest");
  }
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const Fn& fn : checks) {
    auto t0 = std::chrono::steady_clock::now();
    results.push_back(fn(ctx));
    if (options.progress) {
      double dt = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      char buf[64];
      std::snprintf(buf, sizeof(buf), " (%.1fs)", dt);
      *options.progress << results.back().id << " "
                        << (results.back().pass ? "pass" : "FAIL") << buf
                        << std::endl;
    }
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.pass) {
      return false;
    }
  }
  return true;
}

std::string verify_report_text(const std::vector<CheckResult>& results,
                               std::uint64_t seed) {
  std::string out;
  int passed = 0;
  for (const CheckResult& r : results) {
    out += r.id + " " + (r.pass ? "PASS" : "FAIL") + " " + r.name +
           " measured{" + r.measured + "} expected{" + r.expected + "}\n";
    passed += r.pass ? 1 : 0;
  }
  out += "verify: " + std::to_string(passed) + "/" +
         std::to_string(results.size()) + " checks passed, seed=" +
         std::to_string(seed) + "\n";
  return out;
}

Table verify_table(const std::vector<CheckResult>& results) {
  Table t;
  t.columns = {"id", "name", "pass", "measured", "expected"};
  for (const CheckResult& r : results) {
    t.add_row({r.id, r.name, std::int64_t(r.pass ? 1 : 0), r.measured,
               r.expected});
  }
  return t;
}

Table golden_prf_table() {
  Table t;
  t.columns = {"seed", "path", "state", "u", "label_p05"};
  const std::uint64_t seeds[] = {42, 7, 0x5EED, 42 + 1 * kGolden,
                                 42 + 2 * kGolden};
  std::string long_path;
  for (int i = 0; i < 32; ++i) {
    long_path += "10";
  }
  long_path += "1";
  const std::vector<std::string> paths = {
      "",    "0",   "1",          "00",        "01",     "10",
      "11",  "011", "111",        "0000000000", "1011001110", long_path};
  for (std::uint64_t seed : seeds) {
    LabelOracle oracle(seed, 0.5);
    for (const std::string& path : paths) {
      std::uint64_t st = oracle.state_of(VertexId::from_bits(path));
      double u = unit_real(st);
      t.add_row({hex64(seed), path, hex64(st), u,
                 std::int64_t(u < 0.5 ? 1 : 0)});
    }
  }
  return t;
}

Table golden_survival_table() {
  Table t;
  t.columns = {"n", "gw_allones", "rho_dp_half_crit", "periodic_lower",
               "allones_upper"};
  for (std::int64_t n : {2, 3, 5, 10, 20, 50, 100, 200}) {
    t.add_row({n, gw_allones_survival(n), rho_dp(0.5, 0.0, n).value,
               periodic_gw_survival(n), gw_allones_survival(n - 1)});
  }
  return t;
}

const std::string& golden_prf_csv() {
  static const std::string text = golden::kPrfCsv;
  return text;
}

const std::string& golden_survival_csv() {
  static const std::string text = golden::kSurvivalCsv;
  return text;
}

}  // namespace bsl
