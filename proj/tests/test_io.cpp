#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rgg/experiments.hpp"
#include "rgg/io.hpp"
#include "rgg/rng.hpp"

using namespace rgg;

TEST_CASE("format_double round-trips arbitrary doubles") {
  SplitMix64 rng(2024);
  for (int rep = 0; rep < 2000; ++rep) {
    const double v = (rng.uniform01() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(40)) - 20.0);
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("emitting the same report twice is byte-identical") {
  ExperimentConfig cfg;
  cfg.suite = Suite::Conn;
  cfg.grid = {40};
  cfg.trials = 3;
  cfg.base_seed = 888;
  cfg.density = DensitySpec::uniform_cube();
  cfg.schedule = RadiusSchedule::conn(2.0);
  const ExperimentReport a = run_experiment(cfg);
  const ExperimentReport b = run_experiment(cfg);
  CHECK(trial_table_csv(a) == trial_table_csv(b));

  const std::string path = "io_test_report.csv";
  write_file(path, trial_table_csv(a));
  write_file(path, trial_table_csv(b));
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == trial_table_csv(a));
  std::remove(path.c_str());
}

TEST_CASE("trial table ends with a newline and carries the pinned header") {
  ExperimentConfig cfg;
  cfg.grid = {32};
  cfg.trials = 1;
  cfg.base_seed = 5;
  cfg.density = DensitySpec::uniform_cube();
  cfg.schedule = RadiusSchedule::conn(1.0);
  const ExperimentReport report = run_experiment(cfg);
  const std::string csv = trial_table_csv(report);
  CHECK(csv.rfind("seed,n,d,p,l,regime,param,r,nrd,chi_lo,chi_hi,chil_lo,chil_hi,"
                  "chip_lo,chip_hi,omega,viol,scan_max,k_n,ratio,norm_ratio\n", 0) == 0);
  CHECK(csv.back() == '\n');

  // k_n column is empty in the conn regime at t >= 1
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::size_t commas = 0;
  for (const char ch : row)
    if (ch == ',') ++commas;
  CHECK(commas == 20);
}

TEST_CASE("summary json exposes aggregates, trend and manifest") {
  ExperimentConfig cfg;
  cfg.suite = Suite::Sub;
  cfg.grid = {64, 128};
  cfg.trials = 2;
  cfg.base_seed = 99;
  cfg.density = DensitySpec::uniform_cube();
  cfg.schedule = RadiusSchedule::sub(0.5);
  const ExperimentReport report = run_experiment(cfg);
  const std::string json = summary_json(report);
  CHECK(json.find("\"suite\": \"sub\"") != std::string::npos);
  CHECK(json.find("\"per_n\"") != std::string::npos);
  CHECK(json.find("\"median_norm_ratio\"") != std::string::npos);
  CHECK(json.find("\"frac_zero_viol\"") != std::string::npos);
  CHECK(json.find("\"manifest\"") != std::string::npos);
  CHECK(json.find("\"median_k_n\"") != std::string::npos);
  CHECK(json.back() == '\n');
}

TEST_CASE("theory csv has the documented columns") {
  const auto rows = theory_table(2, 2, 1.0, 1.0, 0.1, 10.0, 5);
  const std::string csv = theory_csv(rows);
  CHECK(csv.rfind("t,xi,c_ratio\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("edgelist reader rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edgelist(empty), IoError);
  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edgelist(truncated), IoError);
  std::istringstream bad_index("2 1\n0 5\n");
  CHECK_THROWS_AS(read_edgelist(bad_index), IoError);
  CHECK_THROWS_AS(read_edgelist_file("does-not-exist.edges"), IoError);
}

TEST_CASE("write_file failure raises IoError") {
  CHECK_THROWS_AS(write_file("no-such-dir/file.txt", "x"), IoError);
}

TEST_CASE("coloring lines format") {
  Coloring c;
  c.colors = {0, 1, 0};
  c.num_colors = 2;
  CHECK(to_color_lines(c) == "0 0\n1 1\n2 0\n");
}
