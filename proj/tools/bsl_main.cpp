#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "bsl/experiment.hpp"
#include "bsl/report.hpp"
#include "bsl/svg.hpp"
#include "bsl/verify.hpp"

namespace {

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    value = std::stoull(text.substr(2), &used, 16);
    used += 2;
  } else {
    value = std::stoull(text, &used, 10);
  }
  if (used != text.size()) {
    throw std::invalid_argument("seed must be decimal or 0x-hex: '" + text +
                                "'");
  }
  return value;
}

// Precedence: --seed flag, then BSL_SEED, then the built-in default.
std::uint64_t resolve_seed(const std::string& flag_text) {
  if (!flag_text.empty()) {
    return parse_seed(flag_text);
  }
  if (const char* env = std::getenv("BSL_SEED")) {
    return parse_seed(env);
  }
  return bsl::kDefaultSeed;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  f << text;
}

void emit_table(const bsl::Table& table, const std::string& out,
                const std::string& format) {
  std::string text = format == "json" ? bsl::to_json(table) : bsl::to_csv(table);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

struct CommonFlags {
  std::string seed_text;
  std::string out;
  std::string format = "csv";
  int threads = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed_text,
                    "64-bit seed, decimal or 0x-hex (default: BSL_SEED env, "
                    "then 0x5EED)");
    cmd->add_option("--out", out, "output file (default: stdout)");
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", threads,
                    "worker threads, 0 = all cores, 1 = serial reference");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bsl: search-cost experiments on Bernoulli-labeled binary trees"};
  app.require_subcommand(1);

  // rho
  auto* rho = app.add_subcommand("rho", "survival probability rho(p; eps, n)");
  bsl::ExperimentConfig rho_cfg;
  rho_cfg.command = "rho";
  CommonFlags rho_common;
  double rho_eps = 0.0;
  std::int64_t rho_n = 0;
  rho->add_option("--p", rho_cfg.p, "Bernoulli parameter")->required();
  rho->add_option("--eps", rho_eps, "barrier slack")->required();
  rho->add_option("--n", rho_n, "path length")->required();
  rho->add_option("--method", rho_cfg.method, "dp, mc, or gf")
      ->check(CLI::IsMember({"dp", "mc", "gf"}));
  rho->add_option("--trials", rho_cfg.trials, "Monte Carlo trials");
  rho_cfg.trials = 100000;
  rho_common.attach(rho);
  rho->callback([&] {
    rho_cfg.eps_list = {rho_eps};
    rho_cfg.n_list = {rho_n};
    rho_cfg.seed = resolve_seed(rho_common.seed_text);
    rho_cfg.threads = rho_common.threads;
    emit_table(bsl::run_experiment(rho_cfg), rho_common.out,
               rho_common.format);
  });

  // search
  auto* search = app.add_subcommand("search", "run IDFS or greedy look-ahead");
  bsl::ExperimentConfig search_cfg;
  search_cfg.command = "search";
  CommonFlags search_common;
  double search_eps = 0.0;
  std::int64_t search_n = 0;
  search->add_option("--p", search_cfg.p, "Bernoulli parameter")->required();
  search->add_option("--eps", search_eps, "optimality slack")->required();
  search->add_option("--r", search_cfg.r, "search barrier factor in (0,1)");
  search->add_option("--n", search_n, "target depth")->required();
  search->add_option("--algo", search_cfg.algo, "idfs or greedy")
      ->check(CLI::IsMember({"idfs", "greedy"}));
  search->add_option("--lookahead", search_cfg.lookahead,
                     "greedy look-ahead depth");
  search->add_option("--budget", search_cfg.budget, "charged-query budget");
  search->add_option("--trials", search_cfg.trials, "independent runs");
  search->add_flag("--record", search_cfg.record,
                   "write <out>.examined.csv with the charge order");
  search_common.attach(search);
  search->callback([&] {
    search_cfg.eps_list = {search_eps};
    search_cfg.n_list = {search_n};
    search_cfg.seed = resolve_seed(search_common.seed_text);
    search_cfg.threads = search_common.threads;
    if (search_cfg.record && search_common.out.empty()) {
      throw CLI::ValidationError("--record requires --out");
    }
    emit_table(bsl::run_search(search_cfg), search_common.out,
               search_common.format);
    if (search_cfg.record && search_cfg.algo == "idfs") {
      // Deterministic replay of each trial with recording on.
      bsl::Table rec;
      rec.comments = search_cfg.echo_comments();
      rec.columns = {"trial", "t", "depth", "path"};
      for (std::int64_t i = 0; i < search_cfg.trials; ++i) {
        bsl::LabelOracle oracle = bsl::derive_trial_oracle(
            search_cfg.seed, search_cfg.p, static_cast<std::uint64_t>(i));
        bsl::SearchOutcome out = bsl::idfs(oracle, search_eps, search_cfg.r,
                                           search_n, search_cfg.budget, true);
        for (std::size_t t = 0; t < out.examined_order.size(); ++t) {
          const bsl::VertexId& v = out.examined_order[t];
          rec.add_row({i, std::int64_t(t + 1), std::int64_t(v.depth()),
                       v.to_string()});
        }
      }
      write_file(search_common.out + ".examined.csv", bsl::to_csv(rec));
    }
  });

  // scaling
  auto* scaling =
      app.add_subcommand("scaling", "(eps, n) grid of seeded IDFS batches");
  bsl::ExperimentConfig scal_cfg;
  scal_cfg.command = "scaling";
  scal_cfg.trials = 100;
  CommonFlags scal_common;
  scaling->add_option("--p", scal_cfg.p, "Bernoulli parameter")->required();
  scaling->add_option("--eps-list", scal_cfg.eps_list, "eps values")
      ->required()
      ->delimiter(',');
  scaling->add_option("--n-list", scal_cfg.n_list, "depths")
      ->required()
      ->delimiter(',');
  scaling->add_option("--r", scal_cfg.r, "search barrier factor");
  scaling->add_option("--trials", scal_cfg.trials, "runs per cell");
  scaling->add_option("--budget", scal_cfg.budget, "charged-query budget");
  scal_common.attach(scaling);
  scaling->callback([&] {
    scal_cfg.seed = resolve_seed(scal_common.seed_text);
    scal_cfg.threads = scal_common.threads;
    emit_table(bsl::run_scaling(scal_cfg), scal_common.out, scal_common.format);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  CommonFlags verify_common;
  verify_common.attach(verify);
  bool verify_failed = false;
  verify->callback([&] {
    bsl::VerifyOptions opt;
    opt.seed = resolve_seed(verify_common.seed_text);
    opt.threads = verify_common.threads;
    opt.progress = &std::cerr;
    std::vector<bsl::CheckResult> results = bsl::run_verify_suite(opt);
    std::cout << bsl::verify_report_text(results, opt.seed);
    if (!verify_common.out.empty()) {
      bsl::Table t = bsl::verify_table(results);
      t.comments = {"command=verify", "seed=" + std::to_string(opt.seed)};
      std::string text = verify_common.format == "json" ? bsl::to_json(t)
                                                        : bsl::to_csv(t);
      write_file(verify_common.out, text);
    }
    verify_failed = !bsl::all_passed(results);
  });

  // plot
  auto* plot = app.add_subcommand("plot", "render CSV columns as an SVG");
  std::string plot_in, plot_x, plot_out, plot_title;
  std::vector<std::string> plot_y;
  bool logx = false, logy = false;
  plot->add_option("--in", plot_in, "input CSV")->required();
  plot->add_option("--x", plot_x, "x column")->required();
  plot->add_option("--y", plot_y, "y column(s)")->required()->delimiter(',');
  plot->add_flag("--logx", logx, "log-scale x");
  plot->add_flag("--logy", logy, "log-scale y");
  plot->add_option("--title", plot_title, "plot title");
  plot->add_option("--out", plot_out, "output SVG path")->required();
  plot->callback([&] {
    std::ifstream f(plot_in, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open input file: " + plot_in);
    }
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    bsl::Table table = bsl::parse_csv(text);
    bsl::PlotSpec spec;
    spec.x_col = plot_x;
    spec.y_cols = plot_y;
    spec.logx = logx;
    spec.logy = logy;
    spec.title = plot_title;
    write_file(plot_out, bsl::emit_plot(table, spec));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "bsl: " << e.what() << std::endl;
    return 1;
  }
  return verify_failed ? 1 : 0;
}
