#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>

#include "bsl/experiment.hpp"
#include "bsl/report.hpp"
#include "bsl/svg.hpp"
#include "bsl/trials.hpp"
#include "bsl/verify.hpp"

using namespace bsl;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}
}  // namespace

TEST_CASE("cell formatting is pinned") {
  CHECK(format_cell(Cell{std::int64_t{42}}) == "42");
  CHECK(format_cell(Cell{0.609375}) == "0.609375");
  CHECK(format_cell(Cell{1.0 / 3.0}) == "0.33333333333333331");
  CHECK(format_cell(Cell{std::string("dp")}) == "dp");
  CHECK(cell_to_double(Cell{std::string("2.5")}) == 2.5);
  CHECK_THROWS_AS(cell_to_double(Cell{std::string("abc")}),
                  std::invalid_argument);
}

TEST_CASE("csv round trip is byte identical") {
  Table t;
  t.comments = {"command=rho", "p=0.5"};
  t.columns = {"a", "b", "c"};
  t.add_row({std::int64_t{1}, 0.25, std::string("x")});
  t.add_row({std::int64_t{-7}, 1.0 / 3.0, std::string("y")});
  std::string text = to_csv(t);
  Table parsed = parse_csv(text);
  CHECK(parsed.comments == t.comments);
  CHECK(parsed.columns == t.columns);
  CHECK(to_csv(parsed) == text);

  CHECK_THROWS_AS(parse_csv("no trailing newline"), std::invalid_argument);
  Table bad;
  bad.columns = {"a"};
  bad.add_row({std::string("has,comma")});
  CHECK_THROWS_AS(to_csv(bad), std::invalid_argument);
}

TEST_CASE("json mirrors rows with column order") {
  Table t;
  t.columns = {"n", "value"};
  t.add_row({std::int64_t{2}, 0.609375});
  std::string json = to_json(t);
  CHECK(json.find("\"n\": 2") != std::string::npos);
  CHECK(json.find("\"value\": 0.609375") != std::string::npos);
  CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("experiment config round trips through json") {
  ExperimentConfig cfg;
  cfg.command = "scaling";
  cfg.p = 0.3;
  cfg.eps_list = {0.05, 0.1};
  cfg.n_list = {500, 1000};
  cfg.r = 0.4;
  cfg.trials = 7;
  cfg.seed = 0xDEADBEEF;
  cfg.budget = 12345;
  cfg.record = true;
  cfg.threads = 3;
  ExperimentConfig back = ExperimentConfig::from_json_string(cfg.to_json_string());
  CHECK(back.command == cfg.command);
  CHECK(back.p == cfg.p);
  CHECK(back.eps_list == cfg.eps_list);
  CHECK(back.n_list == cfg.n_list);
  CHECK(back.r == cfg.r);
  CHECK(back.trials == cfg.trials);
  CHECK(back.seed == cfg.seed);
  CHECK(back.budget == cfg.budget);
  CHECK(back.record == cfg.record);
  CHECK(back.threads == cfg.threads);
}

TEST_CASE("rho rows carry the spec example value") {
  ExperimentConfig cfg;
  cfg.command = "rho";
  cfg.method = "dp";
  cfg.p = 0.5;
  cfg.eps_list = {0.0};
  cfg.n_list = {2};
  Table t = run_rho(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(format_cell(t.rows[0][t.column_index("value")]) == "0.609375");

  cfg.method = "gf";
  cfg.eps_list = {0.1};
  cfg.n_list = {10};
  Table gf = run_rho(cfg);
  double lo = cell_to_double(gf.rows[0][gf.column_index("lower")]);
  double hi = cell_to_double(gf.rows[0][gf.column_index("upper")]);
  CHECK(lo >= 0.1);
  CHECK(lo <= hi);

  cfg.p = 0.3;
  CHECK_THROWS_AS(run_rho(cfg), std::invalid_argument);
}

TEST_CASE("search and scaling tables are deterministic and thread-invariant") {
  ExperimentConfig cfg;
  cfg.command = "search";
  cfg.p = 0.5;
  cfg.eps_list = {0.1};
  cfg.n_list = {200};
  cfg.trials = 4;
  cfg.seed = 7;
  std::string a = to_csv(run_search(cfg));
  std::string b = to_csv(run_search(cfg));
  CHECK(a == b);
  cfg.threads = 1;  // serial reference path
  CHECK(to_csv(run_search(cfg)) == a);

  ExperimentConfig sc;
  sc.command = "scaling";
  sc.p = 0.5;
  sc.eps_list = {0.1, 0.2};
  sc.n_list = {150};
  sc.trials = 6;
  sc.seed = 11;
  std::string c = to_csv(run_scaling(sc));
  sc.threads = 1;
  CHECK(to_csv(run_scaling(sc)) == c);

  ExperimentConfig bad;
  bad.command = "mystery";
  CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("map_indexed parallel equals the serial reference") {
  auto fn = [](std::int64_t i) { return i * i - 3 * i + 1; };
  auto serial = map_indexed_serial<std::int64_t>(5000, fn);
  auto parallel = map_indexed<std::int64_t>(5000, fn, 0);
  CHECK(serial == parallel);
  CHECK(hardware_threads() >= 1);
}

TEST_CASE("map_indexed propagates trial exceptions") {
  auto boom = [](std::int64_t i) -> int {
    if (i == 37) {
      throw std::invalid_argument("bad trial");
    }
    return 0;
  };
  CHECK_THROWS_AS(map_indexed<int>(100, boom, 0), std::invalid_argument);
  CHECK_THROWS_AS(map_indexed<int>(100, boom, 1), std::invalid_argument);
}

TEST_CASE("golden fixtures: embedded bytes match the builders") {
  CHECK(to_csv(golden_prf_table()) == golden_prf_csv());
  CHECK(to_csv(golden_survival_table()) == golden_survival_csv());
}

TEST_CASE("golden fixtures: files on disk match the embedded bytes") {
#ifdef BSL_SOURCE_DIR
  std::string dir = BSL_SOURCE_DIR;
  CHECK(slurp(dir + "/tests/golden/golden_prf.csv") == golden_prf_csv());
  CHECK(slurp(dir + "/tests/golden/golden_survival.csv") ==
        golden_survival_csv());
#endif
}

TEST_CASE("svg emission") {
  Table t;
  t.columns = {"x", "y1", "y2"};
  for (int i = 1; i <= 10; ++i) {
    t.add_row({std::int64_t{i}, 1.0 / i, 0.5 * i});
  }
  PlotSpec spec;
  spec.x_col = "x";
  spec.y_cols = {"y1", "y2"};
  std::string svg = emit_plot(t, spec);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("viewBox=\"0 0 960 600\"") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(emit_plot(t, spec) == svg);  // same bytes on re-emission

  spec.logy = true;
  std::string logsvg = emit_plot(t, spec);
  CHECK(logsvg.find("polyline") != std::string::npos);

  Table empty;
  empty.columns = {"x", "y"};
  CHECK_THROWS_AS(emit_plot(empty, spec), std::invalid_argument);

  Table neg;
  neg.columns = {"x", "y1"};
  neg.add_row({std::int64_t{1}, -2.0});
  PlotSpec bad;
  bad.x_col = "x";
  bad.y_cols = {"y1"};
  bad.logy = true;
  CHECK_THROWS_AS(emit_plot(neg, bad), std::invalid_argument);
}

TEST_CASE("verify table and report text are well formed") {
  std::vector<CheckResult> results = {
      {"C1", "alpha", true, "m", "e"},
      {"C2", "beta", false, "m2", "e2"},
  };
  CHECK_FALSE(all_passed(results));
  std::string text = verify_report_text(results, 7);
  CHECK(text.find("C1 PASS alpha") != std::string::npos);
  CHECK(text.find("C2 FAIL beta") != std::string::npos);
  CHECK(text.find("1/2 checks passed, seed=7") != std::string::npos);
  Table t = verify_table(results);
  CHECK(t.rows.size() == 2);
}
