#include "bsl/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "bsl/rate.hpp"
#include "bsl/survival.hpp"
#include "bsl/trials.hpp"

namespace bsl {

namespace {

std::string join_doubles(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += format_double17(xs[i]);
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += std::to_string(xs[i]);
  }
  return out;
}

void require_cfg(bool ok, const std::string& msg) {
  if (!ok) {
    throw std::invalid_argument("config: " + msg);
  }
}

}  // namespace

std::vector<std::string> ExperimentConfig::echo_comments() const {
  std::vector<std::string> out;
  out.push_back("command=" + command);
  out.push_back("p=" + format_double17(p));
  out.push_back("eps=" + join_doubles(eps_list));
  out.push_back("n=" + join_ints(n_list));
  out.push_back("r=" + format_double17(r));
  out.push_back("s=" + format_double17(s));
  out.push_back("method=" + method);
  out.push_back("algo=" + algo);
  out.push_back("lookahead=" + std::to_string(lookahead));
  out.push_back("trials=" + std::to_string(trials));
  out.push_back("seed=" + std::to_string(seed));
  out.push_back("budget=" + std::to_string(budget));
  out.push_back(std::string("record=") + (record ? "1" : "0"));
  return out;
}

std::string ExperimentConfig::to_json_string() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["p"] = p;
  j["eps_list"] = eps_list;
  j["n_list"] = n_list;
  j["r"] = r;
  j["s"] = s;
  j["method"] = method;
  j["algo"] = algo;
  j["lookahead"] = lookahead;
  j["trials"] = trials;
  j["seed"] = seed;
  j["budget"] = budget;
  j["record"] = record;
  j["threads"] = threads;
  return j.dump(2) + "\n";
}

ExperimentConfig ExperimentConfig::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.p = j.at("p").get<double>();
  cfg.eps_list = j.at("eps_list").get<std::vector<double>>();
  cfg.n_list = j.at("n_list").get<std::vector<std::int64_t>>();
  cfg.r = j.at("r").get<double>();
  cfg.s = j.at("s").get<double>();
  cfg.method = j.at("method").get<std::string>();
  cfg.algo = j.at("algo").get<std::string>();
  cfg.lookahead = j.at("lookahead").get<int>();
  cfg.trials = j.at("trials").get<std::int64_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.budget = j.at("budget").get<std::int64_t>();
  cfg.record = j.at("record").get<bool>();
  cfg.threads = j.at("threads").get<int>();
  return cfg;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag * 0xD1B54A32D192ED03ull + 0x51ull));
}

Table run_rho(const ExperimentConfig& cfg) {
  require_cfg(!cfg.eps_list.empty() && !cfg.n_list.empty(),
              "rho needs eps and n");
  require_cfg(cfg.method == "dp" || cfg.method == "mc" || cfg.method == "gf",
              "method must be dp, mc, or gf");
  Table t;
  t.comments = cfg.echo_comments();
  t.columns = {"p",     "eps",   "n",      "method", "trials",
               "seed",  "value", "stderr", "lower",  "upper"};
  for (double eps : cfg.eps_list) {
    for (std::int64_t n : cfg.n_list) {
      if (cfg.method == "dp") {
        SurvivalEstimate e = rho_dp(cfg.p, eps, n);
        t.add_row({cfg.p, eps, n, std::string("dp"), std::int64_t{0},
                   std::int64_t(cfg.seed), e.value, 0.0, e.value, e.value});
      } else if (cfg.method == "mc") {
        require_cfg(cfg.trials >= 1, "mc needs trials >= 1");
        SurvivalEstimate e =
            rho_mc(cfg.p, eps, n, cfg.trials, cfg.seed, cfg.threads);
        t.add_row({cfg.p, eps, n, std::string("mc"), e.trials,
                   std::int64_t(cfg.seed), e.value, e.stderr_, e.value,
                   e.value});
      } else {
        require_cfg(cfg.p == 0.5, "gf bracket applies to p = 1/2 only");
        auto [lo, hi] = rho_infinity_bracket_eps(eps);
        t.add_row({cfg.p, eps, n, std::string("gf"), std::int64_t{0},
                   std::int64_t(cfg.seed), lo, 0.0, lo, hi});
      }
    }
  }
  return t;
}

namespace {

struct TrialStats {
  std::int64_t queries = 0;
  std::int64_t restarts = 0;
  std::int64_t witness_sum = 0;
  std::uint8_t success = 0;
};

TrialStats run_one_search(const ExperimentConfig& cfg, double eps,
                          std::int64_t n, std::uint64_t master,
                          std::int64_t trial) {
  LabelOracle oracle =
      derive_trial_oracle(master, cfg.p, static_cast<std::uint64_t>(trial));
  SearchOutcome out;
  if (cfg.algo == "idfs") {
    out = idfs(oracle, eps, cfg.r, n, cfg.budget);
  } else {
    out = greedy_lookahead(oracle, cfg.lookahead, n);
  }
  TrialStats stats;
  stats.queries = out.queries;
  stats.restarts = out.restarts;
  stats.witness_sum = out.witness_sum;
  stats.success = out.success ? 1 : 0;
  return stats;
}

}  // namespace

Table run_search(const ExperimentConfig& cfg) {
  require_cfg(cfg.eps_list.size() == 1 && cfg.n_list.size() == 1,
              "search takes a single eps and n");
  require_cfg(cfg.algo == "idfs" || cfg.algo == "greedy",
              "algo must be idfs or greedy");
  require_cfg(cfg.trials >= 1, "search needs trials >= 1");
  double eps = cfg.eps_list[0];
  std::int64_t n = cfg.n_list[0];
  double c = critical_slope_clamped(cfg.p);
  std::int64_t threshold = slope_threshold(c - eps, n);

  std::vector<TrialStats> stats = map_indexed<TrialStats>(
      cfg.trials,
      [&](std::int64_t i) { return run_one_search(cfg, eps, n, cfg.seed, i); },
      cfg.threads);

  Table t;
  t.comments = cfg.echo_comments();
  t.columns = {"p",     "eps",     "r",       "n",       "algo",
               "lookahead", "trial", "seed",  "budget",  "success",
               "queries", "restarts", "witness_sum", "threshold"};
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const TrialStats& s = stats[static_cast<std::size_t>(i)];
    t.add_row({cfg.p, eps, cfg.r, n, cfg.algo, std::int64_t(cfg.lookahead), i,
               std::int64_t(cfg.seed), cfg.budget, std::int64_t(s.success),
               s.queries, s.restarts, s.witness_sum, threshold});
  }
  return t;
}

Table run_scaling(const ExperimentConfig& cfg) {
  require_cfg(!cfg.eps_list.empty() && !cfg.n_list.empty(),
              "scaling needs eps and n lists");
  require_cfg(cfg.trials >= 1, "scaling needs trials >= 1");
  Table t;
  t.comments = cfg.echo_comments();
  t.columns = {"p",         "r",          "eps",          "n",
               "trials",    "seed",       "success_rate", "mean_queries",
               "sd_queries", "rho_ref",   "ratio_q_eps_n", "ratio_q_rho_n"};
  std::uint64_t cell = 0;
  for (double eps : cfg.eps_list) {
    for (std::int64_t n : cfg.n_list) {
      std::uint64_t master = sub_seed(cfg.seed, cell);
      std::vector<TrialStats> stats = map_indexed<TrialStats>(
          cfg.trials,
          [&](std::int64_t i) {
            return run_one_search(cfg, eps, n, master, i);
          },
          cfg.threads);
      double mean = 0, rate = 0;
      for (const TrialStats& s : stats) {
        mean += static_cast<double>(s.queries);
        rate += s.success;
      }
      mean /= static_cast<double>(cfg.trials);
      rate /= static_cast<double>(cfg.trials);
      double var = 0;
      for (const TrialStats& s : stats) {
        double d = static_cast<double>(s.queries) - mean;
        var += d * d;
      }
      double sd = cfg.trials > 1
                      ? std::sqrt(var / static_cast<double>(cfg.trials - 1))
                      : 0.0;
      double rho_ref =
          rho_dp(cfg.p, cfg.r * eps, std::min<std::int64_t>(n, kRhoDepthCap))
              .value;
      double nd = static_cast<double>(n);
      t.add_row({cfg.p, cfg.r, eps, n, cfg.trials, std::int64_t(cfg.seed),
                 rate, mean, sd, rho_ref, mean * eps / nd,
                 mean * rho_ref / nd});
      ++cell;
    }
  }
  return t;
}

Table run_experiment(const ExperimentConfig& cfg) {
  if (cfg.command == "rho") {
    return run_rho(cfg);
  }
  if (cfg.command == "search") {
    return run_search(cfg);
  }
  if (cfg.command == "scaling") {
    return run_scaling(cfg);
  }
  throw std::invalid_argument("config: unknown command '" + cfg.command + "'");
}

}  // namespace bsl
