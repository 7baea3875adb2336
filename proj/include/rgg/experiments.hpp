#ifndef RGG_EXPERIMENTS_HPP
#define RGG_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgg/cloud.hpp"
#include "rgg/coloring.hpp"
#include "rgg/density.hpp"
#include "rgg/graph.hpp"
#include "rgg/schedule.hpp"

namespace rgg {

inline constexpr const char* kVersion = "0.1.0";

// How a trial turns graphs into chromatic brackets. Auto uses the exact
// search for n <= exact_max_n and DSATUR above it; the clique lower bound is
// always reported alongside.
struct ColoringPolicy {
  enum class Mode { Auto, Exact, Dsatur, Greedy };
  Mode mode = Mode::Auto;
  std::size_t exact_max_n = 120;
  std::uint64_t exact_budget = 50'000'000;
  std::uint64_t clique_budget = 20'000'000;

  EstimateOptions options_for(std::size_t n) const;
  std::string name() const;
};

struct TrialConfig {
  std::size_t n = 0;
  int d = 2;
  LpNorm p = LpNorm::l2();
  int l = 2;
  DensitySpec density;
  RadiusSchedule schedule;
  std::uint64_t seed = 0;
  ColoringPolicy policy;
};

// One Monte-Carlo sample. chi is the bracket for the chromatic number of the
// graph at radius r, chi_l for its l-th power, chi_prime for the graph at
// radius l*r on the same cloud. Brackets are tightened through the always-
// valid chain chi <= chi_l <= chi_prime, so the recorded bounds respect the
// sandwich on every trial, heuristic or exact.
struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int d = 2;
  LpNorm p = LpNorm::l2();
  int l = 1;
  Regime regime = Regime::Conn;
  double regime_param = 0.0;
  double r = 0.0;
  double nrd = 0.0;
  int chi_lo = 0, chi_hi = 0;
  int chil_lo = 0, chil_hi = 0;
  int chip_lo = 0, chip_hi = 0;
  bool chi_exact = false, chil_exact = false, chip_exact = false;
  int omega = 0;             // best clique lower bound on the base graph
  int max_deg_power = 0;     // maximum degree of the l-th power
  std::int64_t detours = 0;  // pairs closer than l*r but more than l hops apart
  int scan_max = 0;          // largest point count in a radius-r ball centered at a sample
  std::optional<double> growth;  // ln n / ln(ln n / nrd) when nrd < ln n
  double ratio = 0.0;            // chil_hi / chi_hi
  double norm_ratio = 0.0;       // ratio / l^d

  bool all_exact() const { return chi_exact && chil_exact && chip_exact; }
};

// Exact count of unordered pairs with ||x_i - x_j|| < l * r but graph
// distance > l in g. Candidate pairs come from a cell grid at radius l*r;
// distances from depth-limited BFS. Zero for l = 1 by construction.
std::int64_t detour_pairs(const PointCloud& cloud, const Graph& g, int l);

// Largest number of sample points in a ball of the cloud's radius centered
// at a sample point (center included). Maximizing only over sample centers
// makes this a lower bound for the continuum scan statistic.
int scan_statistic(const PointCloud& cloud);

// The integer a maximizing the fraction of values falling in {a, a+1};
// candidates are the observed values, ties go to the smaller a.
struct FocusingWindow {
  int a = 0;
  double mass = 0.0;
};
FocusingWindow focusing_mass(const std::vector<int>& values);

TrialRecord run_trial(const TrialConfig& cfg);

enum class Suite { Focusing, Super, Conn, Sub, Detours };

std::string suite_name(Suite s);
Suite parse_suite(const std::string& s);

struct ExperimentConfig {
  Suite suite = Suite::Conn;
  std::vector<std::size_t> grid;  // n values, one batch of trials each
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  int d = 2;
  LpNorm p = LpNorm::l2();
  int l = 2;
  DensitySpec density;
  RadiusSchedule schedule;
  ColoringPolicy policy;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Per-n summaries, all recomputable from the trial table alone. Medians are
// the midpoint convention (mean of the two central order statistics for even
// counts); quartiles are nearest-rank.
struct NAggregate {
  std::size_t n = 0;
  double median_ratio = 0.0;
  double median_norm_ratio = 0.0;
  double q25_norm_ratio = 0.0;
  double q75_norm_ratio = 0.0;
  double mean_detours = 0.0;
  double frac_zero_detours = 0.0;
  int focusing_a = 0;
  double focusing_mass = 0.0;
  double median_scan_max = 0.0;
  std::optional<double> median_growth;
  int max_chil_hi = 0;
};

struct TrendStats {
  double spearman_norm_ratio = 0.0;  // rank correlation of per-n median vs n
  bool median_ratio_nonincreasing = false;
  bool median_norm_ratio_nondecreasing = false;
  bool frac_zero_detours_nondecreasing = false;
  double last_frac_zero_detours = 0.0;
  double min_focusing_mass = 0.0;
  double largest_n_median_ratio = 0.0;
  double smallest_n_median_ratio = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;  // grid-major, trial index within
  std::vector<NAggregate> per_n;
  TrendStats trend;
  double wall_ms = 0.0;
  unsigned threads_used = 1;
  std::string version = kVersion;
};

// Runs trials in parallel with per-trial seeds mix_seed(base, grid_i, trial_i)
// and aggregates in trial-index order; the result is identical for any
// thread count. A trial failure aborts with the offending seed in the message.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// aggregation exposed for recomputation checks
std::vector<NAggregate> aggregate_per_n(const ExperimentConfig& cfg,
                                        const std::vector<TrialRecord>& trials);
TrendStats compute_trend(const std::vector<NAggregate>& per_n);

}  // namespace rgg

#endif  // RGG_EXPERIMENTS_HPP
