// rggchroma: random geometric graphs, distance colorings, and Monte-Carlo
// suites for their chromatic ratios. One binary, four subcommands:
//
//   generate    sample a cloud, build the graph, emit an edge list
//   color       color a graph's l-th power, emit "index color" lines
//   theory      tabulate the limit functionals over a log grid of t
//   experiment  run a Monte-Carlo suite, emit a CSV trial table or a JSON
//               summary
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal error.
// RGGCHROMA_THREADS overrides the worker count for experiment suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rgg/experiments.hpp"
#include "rgg/io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

struct SharedFlags {
  std::size_t n = 1000;
  int d = 2;
  std::string p = "2";
  int l = 2;
  std::string density = "uniform-cube";
  std::string regime = "conn:1";
  std::uint64_t seed = 0;
  std::string method = "dsatur";
  std::string out;
};

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    rgg::write_file(out_path, content);
}

rgg::ColoringPolicy policy_from(const std::string& method) {
  rgg::ColoringPolicy policy;
  if (method == "auto")
    policy.mode = rgg::ColoringPolicy::Mode::Auto;
  else if (method == "exact")
    policy.mode = rgg::ColoringPolicy::Mode::Exact;
  else if (method == "dsatur")
    policy.mode = rgg::ColoringPolicy::Mode::Dsatur;
  else if (method == "greedy")
    policy.mode = rgg::ColoringPolicy::Mode::Greedy;
  else
    throw std::invalid_argument("--method: want exact|dsatur|greedy|auto, got '" + method + "'");
  return policy;
}

unsigned threads_from_env() {
  const char* env = std::getenv("RGGCHROMA_THREADS");
  if (env == nullptr) return 0;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 0;
}

rgg::PointCloud sampled_cloud(const SharedFlags& flags) {
  if (flags.n < 1) throw std::invalid_argument("--n: must be >= 1");
  const rgg::DensitySpec density = rgg::DensitySpec::parse(flags.density);
  const rgg::RadiusSchedule schedule = rgg::RadiusSchedule::parse(flags.regime);
  const rgg::LpNorm norm = rgg::LpNorm::parse(flags.p);
  const double r = schedule.radius_for(flags.n, flags.d);
  return rgg::sample_points(flags.n, density, flags.d, flags.seed, r, norm);
}

int run_generate(const SharedFlags& flags, const std::string& format) {
  if (format != "edgelist")
    throw std::invalid_argument("generate supports only --format edgelist");
  const rgg::Graph g = rgg::build_graph(sampled_cloud(flags));
  emit(rgg::to_edgelist(g), flags.out);
  return 0;
}

int run_color(const SharedFlags& flags, const std::string& in_path) {
  rgg::Graph g;
  if (!in_path.empty())
    g = rgg::read_edgelist_file(in_path);
  else
    g = rgg::build_graph(sampled_cloud(flags));
  if (flags.l < 1) throw std::invalid_argument("--l: must be >= 1");

  const rgg::Graph power = rgg::graph_power(g, flags.l);
  const rgg::ColoringPolicy policy = policy_from(flags.method);
  rgg::Coloring coloring;
  switch (policy.mode) {
    case rgg::ColoringPolicy::Mode::Exact: {
      rgg::exact_chromatic(power, policy.exact_budget, &coloring);
      break;
    }
    case rgg::ColoringPolicy::Mode::Greedy:
      coloring = rgg::greedy_color_smallest_last(power);
      break;
    default:
      coloring = rgg::dsatur(power);
      break;
  }
  emit(rgg::to_color_lines(coloring), flags.out);
  std::cerr << "colors=" << coloring.num_colors << " method=" << rgg::method_name(coloring.method)
            << " l=" << flags.l << "\n";
  return 0;
}

int run_theory(const SharedFlags& flags, double volume, double fmax, double tmin, double tmax,
               int steps) {
  const auto rows = rgg::theory_table(flags.l, flags.d, volume, fmax, tmin, tmax, steps);
  emit(rgg::theory_csv(rows), flags.out);
  return 0;
}

int run_experiment(const SharedFlags& flags, const std::string& suite_arg,
                   const std::vector<std::size_t>& grid, std::size_t trials,
                   const std::string& format) {
  if (grid.empty()) throw std::invalid_argument("--grid: at least one n value is required");
  if (trials < 1) throw std::invalid_argument("--trials: must be >= 1");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("experiment supports --format csv or json");

  rgg::ExperimentConfig cfg;
  cfg.schedule = rgg::RadiusSchedule::parse(flags.regime);
  if (suite_arg.empty()) {
    // default suite follows the regime
    switch (cfg.schedule.regime) {
      case rgg::Regime::Sub:
        cfg.suite = rgg::Suite::Sub;
        break;
      case rgg::Regime::Conn:
        cfg.suite = rgg::Suite::Conn;
        break;
      case rgg::Regime::Super:
        cfg.suite = rgg::Suite::Super;
        break;
      case rgg::Regime::Sparse:
        cfg.suite = rgg::Suite::Sub;
        break;
    }
  } else {
    cfg.suite = rgg::parse_suite(suite_arg);
  }
  cfg.grid = grid;
  cfg.trials = trials;
  cfg.base_seed = flags.seed;
  cfg.d = flags.d;
  cfg.p = rgg::LpNorm::parse(flags.p);
  cfg.l = flags.l;
  cfg.density = rgg::DensitySpec::parse(flags.density);
  cfg.policy = policy_from(flags.method);
  cfg.threads = threads_from_env();

  // validate the whole grid before any work or file output
  for (const std::size_t n : cfg.grid) cfg.schedule.radius_for(n, cfg.d);

  const rgg::ExperimentReport report = rgg::run_experiment(cfg);
  emit(format == "csv" ? rgg::trial_table_csv(report) : rgg::summary_json(report), flags.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random geometric graph distance-coloring toolkit"};
  app.require_subcommand(1);

  SharedFlags flags;
  std::string format = "csv";
  std::string in_path;
  std::string suite;
  std::vector<std::size_t> grid;
  std::size_t trials = 10;
  double volume = 1.0, fmax = 1.0, tmin = 1e-3, tmax = 1e6;
  int steps = 19;

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--n", flags.n, "number of points");
    cmd->add_option("--d", flags.d, "dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--p", flags.p, "norm parameter: 1|2|inf|real>=1");
    cmd->add_option("--l", flags.l, "graph-distance reach")->check(CLI::PositiveNumber);
    cmd->add_option("--density", flags.density, "uniform-cube|gaussian|step-cube:lo,hi");
    cmd->add_option("--regime", flags.regime, "sub:b|conn:t|super:a|sparse:eps");
    cmd->add_option("--seed", flags.seed, "64-bit seed");
    cmd->add_option("--method", flags.method, "exact|dsatur|greedy|auto");
    cmd->add_option("--out", flags.out, "output path (stdout when omitted)");
  };

  CLI::App* generate = app.add_subcommand("generate", "sample a cloud and emit its graph");
  add_shared(generate);
  generate->add_option("--format", format, "edgelist")->default_val("edgelist");

  CLI::App* color = app.add_subcommand("color", "color the l-th power of a graph");
  add_shared(color);
  color->add_option("--in", in_path, "edge-list file (generated when omitted)");

  CLI::App* theory = app.add_subcommand("theory", "tabulate limit functionals over t");
  add_shared(theory);
  theory->add_option("--volume", volume, "indicator window volume");
  theory->add_option("--fmax", fmax, "density essential supremum");
  theory->add_option("--tmin", tmin, "low end of the t grid");
  theory->add_option("--tmax", tmax, "high end of the t grid");
  theory->add_option("--steps", steps, "grid rows");

  CLI::App* experiment = app.add_subcommand("experiment", "run a Monte-Carlo suite");
  add_shared(experiment);
  experiment->add_option("--suite", suite, "focusing|super|conn|sub|detours");
  experiment->add_option("--grid", grid, "comma list of n values")->delimiter(',');
  experiment->add_option("--trials", trials, "trials per n");
  experiment->add_option("--format", format, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(flags, format);
    if (color->parsed()) return run_color(flags, in_path);
    if (theory->parsed()) return run_theory(flags, volume, fmax, tmin, tmax, steps);
    if (experiment->parsed()) return run_experiment(flags, suite, grid, trials, format);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const rgg::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
