#include "rgg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "rgg/cell_grid.hpp"
#include "rgg/clique.hpp"
#include "rgg/rng.hpp"
#include "rgg/theory.hpp"

namespace rgg {

EstimateOptions ColoringPolicy::options_for(std::size_t n) const {
  EstimateOptions opts;
  opts.exact_budget = exact_budget;
  opts.clique_budget = clique_budget;
  switch (mode) {
    case Mode::Auto:
      opts.method = n <= exact_max_n ? ChromaticMethod::Exact : ChromaticMethod::Dsatur;
      break;
    case Mode::Exact:
      opts.method = ChromaticMethod::Exact;
      break;
    case Mode::Dsatur:
      opts.method = ChromaticMethod::Dsatur;
      break;
    case Mode::Greedy:
      opts.method = ChromaticMethod::Greedy;
      break;
  }
  return opts;
}

std::string ColoringPolicy::name() const {
  switch (mode) {
    case Mode::Auto:
      return "auto";
    case Mode::Exact:
      return "exact";
    case Mode::Dsatur:
      return "dsatur";
    case Mode::Greedy:
      return "greedy";
  }
  throw std::logic_error("ColoringPolicy: bad mode");
}

std::int64_t detour_pairs(const PointCloud& cloud, const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("detour_pairs: l must be >= 1");
  const std::size_t n = cloud.size();
  if (g.n != n) throw std::invalid_argument("detour_pairs: graph does not match cloud");

  const double reach = static_cast<double>(l) * cloud.radius;
  const CellGrid grid(cloud, reach);

  std::int64_t count = 0;
  std::vector<int> depth(n, -1);
  std::vector<int> frontier, next;
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    // mark everything within l hops of i
    touched.clear();
    frontier.clear();
    frontier.push_back(static_cast<int>(i));
    depth[i] = 0;
    touched.push_back(i);
    for (int hop = 1; hop <= l && !frontier.empty(); ++hop) {
      next.clear();
      for (const int u : frontier) {
        for (const int v : g.adj[static_cast<std::size_t>(u)]) {
          if (depth[static_cast<std::size_t>(v)] < 0) {
            depth[static_cast<std::size_t>(v)] = hop;
            next.push_back(v);
            touched.push_back(static_cast<std::size_t>(v));
          }
        }
      }
      frontier.swap(next);
    }

    grid.visit_candidates(i, [&](std::size_t j) {
      if (j <= i) return;
      if (depth[j] >= 0) return;  // within l hops
      if (lp_distance(cloud.point(i), cloud.point(j), cloud.norm) < reach) ++count;
    });

    for (const std::size_t v : touched) depth[v] = -1;
  }
  return count;
}

int scan_statistic(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  if (n < 1) throw std::invalid_argument("scan_statistic: empty cloud");
  const CellGrid grid(cloud, cloud.radius);
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int here = 0;
    grid.visit_candidates(i, [&](std::size_t j) {
      if (lp_distance(cloud.point(i), cloud.point(j), cloud.norm) < cloud.radius) ++here;
    });
    best = std::max(best, here);
  }
  return best;
}

FocusingWindow focusing_mass(const std::vector<int>& values) {
  if (values.empty()) throw std::invalid_argument("focusing_mass: no values");
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  auto count_of = [&](int v) {
    const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), v);
    return static_cast<std::size_t>(hi - lo);
  };

  FocusingWindow best{sorted.front(), -1.0};
  for (std::size_t k = 0; k < sorted.size();) {
    const int a = sorted[k];
    const std::size_t in_window = count_of(a) + count_of(a + 1);
    const double mass = static_cast<double>(in_window) / static_cast<double>(sorted.size());
    if (mass > best.mass) best = {a, mass};
    while (k < sorted.size() && sorted[k] == a) ++k;
  }
  return best;
}

TrialRecord run_trial(const TrialConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("run_trial: n must be >= 1");
  if (cfg.l < 1) throw std::invalid_argument("run_trial: l must be >= 1");

  TrialRecord rec;
  rec.seed = cfg.seed;
  rec.n = cfg.n;
  rec.d = cfg.d;
  rec.p = cfg.p;
  rec.l = cfg.l;
  rec.regime = cfg.schedule.regime;
  rec.regime_param = cfg.schedule.param;

  rec.r = cfg.schedule.radius_for(cfg.n, cfg.d);
  rec.nrd = static_cast<double>(cfg.n) * std::pow(rec.r, cfg.d);

  const PointCloud cloud = sample_points(cfg.n, cfg.density, cfg.d, cfg.seed, rec.r, cfg.p);
  const Graph g = build_graph(cloud);
  const EstimateOptions opts = cfg.policy.options_for(cfg.n);

  ChromaticEstimate chi = chromatic_estimate(g, opts);
  const CliqueResult omega = clique_number(g, opts.clique_budget);
  rec.omega = omega.size;

  ChromaticEstimate chil;
  {
    const Graph power = graph_power(g, cfg.l);
    rec.max_deg_power = static_cast<int>(max_degree(power));
    chil = chromatic_estimate(power, opts);
  }

  ChromaticEstimate chip;
  {
    const Graph prime = build_graph(cloud, static_cast<double>(cfg.l) * rec.r);
    chip = chromatic_estimate(prime, opts);
  }

  rec.detours = detour_pairs(cloud, g, cfg.l);
  rec.scan_max = scan_statistic(cloud);

  const double ln_n = std::log(static_cast<double>(cfg.n));
  if (cfg.n >= 3 && rec.nrd > 0.0 && rec.nrd < ln_n) rec.growth = growth_scale(cfg.n, rec.nrd);

  // Tighten the brackets through the deterministic chain chi <= chi_l <=
  // chi_prime (the power of the radius-r graph is a subgraph of the radius-
  // l*r graph by the triangle inequality). Each clamp swaps one valid bound
  // for another valid bound, so exactness flags survive.
  rec.chip_hi = chip.upper;
  rec.chil_hi = std::min(chil.upper, rec.chip_hi);
  rec.chi_hi = std::min(chi.upper, rec.chil_hi);
  rec.chi_lo = chi.lower;
  rec.chil_lo = std::max(chil.lower, rec.chi_lo);
  rec.chip_lo = std::max(chip.lower, rec.chil_lo);
  rec.chi_exact = chi.exact;
  rec.chil_exact = chil.exact;
  rec.chip_exact = chip.exact;

  rec.ratio = static_cast<double>(rec.chil_hi) / static_cast<double>(rec.chi_hi);
  rec.norm_ratio = rec.ratio / std::pow(static_cast<double>(cfg.l), cfg.d);
  return rec;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Focusing:
      return "focusing";
    case Suite::Super:
      return "super";
    case Suite::Conn:
      return "conn";
    case Suite::Sub:
      return "sub";
    case Suite::Detours:
      return "detours";
  }
  throw std::logic_error("suite_name: bad suite");
}

Suite parse_suite(const std::string& s) {
  if (s == "focusing") return Suite::Focusing;
  if (s == "super") return Suite::Super;
  if (s == "conn") return Suite::Conn;
  if (s == "sub") return Suite::Sub;
  if (s == "detours") return Suite::Detours;
  throw std::invalid_argument("suite: unknown suite '" + s + "'");
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size();
  if (k % 2 == 1) return v[k / 2];
  return 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

double nearest_rank(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto k = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(v.size())));
  return v[std::max<std::size_t>(k, 1) - 1];
}

std::vector<double> ranks_with_ties(const std::vector<double>& v) {
  const std::size_t k = v.size();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(k, 0.0);
  std::size_t i = 0;
  while (i < k) {
    std::size_t j = i;
    while (j + 1 < k && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[idx[t]] = avg;
    i = j + 1;
  }
  return rank;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t k = x.size();
  if (k < 2) return 0.0;
  const std::vector<double> rx = ranks_with_ties(x);
  const std::vector<double> ry = ranks_with_ties(y);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

std::vector<NAggregate> aggregate_per_n(const ExperimentConfig& cfg,
                                        const std::vector<TrialRecord>& trials) {
  std::vector<NAggregate> out;
  out.reserve(cfg.grid.size());
  for (std::size_t gi = 0; gi < cfg.grid.size(); ++gi) {
    const std::size_t from = gi * cfg.trials;
    const std::size_t to = from + cfg.trials;
    NAggregate agg;
    agg.n = cfg.grid[gi];

    std::vector<double> ratios, norm_ratios, scans, growths;
    std::vector<int> chil_values;
    double detour_sum = 0.0;
    std::size_t zero_detours = 0;
    for (std::size_t k = from; k < to; ++k) {
      const TrialRecord& t = trials[k];
      ratios.push_back(t.ratio);
      norm_ratios.push_back(t.norm_ratio);
      scans.push_back(static_cast<double>(t.scan_max));
      chil_values.push_back(t.chil_hi);
      detour_sum += static_cast<double>(t.detours);
      if (t.detours == 0) ++zero_detours;
      if (t.growth) growths.push_back(*t.growth);
      agg.max_chil_hi = std::max(agg.max_chil_hi, t.chil_hi);
    }
    agg.median_ratio = median_of(ratios);
    agg.median_norm_ratio = median_of(norm_ratios);
    agg.q25_norm_ratio = nearest_rank(norm_ratios, 0.25);
    agg.q75_norm_ratio = nearest_rank(norm_ratios, 0.75);
    agg.mean_detours = detour_sum / static_cast<double>(cfg.trials);
    agg.frac_zero_detours =
        static_cast<double>(zero_detours) / static_cast<double>(cfg.trials);
    const FocusingWindow fw = focusing_mass(chil_values);
    agg.focusing_a = fw.a;
    agg.focusing_mass = fw.mass;
    agg.median_scan_max = median_of(scans);
    if (growths.size() == cfg.trials) agg.median_growth = median_of(growths);
    out.push_back(agg);
  }
  return out;
}

TrendStats compute_trend(const std::vector<NAggregate>& per_n) {
  TrendStats trend;
  if (per_n.empty()) return trend;

  std::vector<double> ns, medians;
  for (const NAggregate& a : per_n) {
    ns.push_back(static_cast<double>(a.n));
    medians.push_back(a.median_norm_ratio);
  }
  trend.spearman_norm_ratio = spearman(ns, medians);

  trend.median_ratio_nonincreasing = true;
  trend.median_norm_ratio_nondecreasing = true;
  trend.frac_zero_detours_nondecreasing = true;
  trend.min_focusing_mass = per_n.front().focusing_mass;
  for (std::size_t k = 0; k + 1 < per_n.size(); ++k) {
    if (per_n[k + 1].median_ratio > per_n[k].median_ratio)
      trend.median_ratio_nonincreasing = false;
    if (per_n[k + 1].median_norm_ratio < per_n[k].median_norm_ratio)
      trend.median_norm_ratio_nondecreasing = false;
    if (per_n[k + 1].frac_zero_detours < per_n[k].frac_zero_detours)
      trend.frac_zero_detours_nondecreasing = false;
  }
  for (const NAggregate& a : per_n)
    trend.min_focusing_mass = std::min(trend.min_focusing_mass, a.focusing_mass);
  trend.last_frac_zero_detours = per_n.back().frac_zero_detours;
  trend.largest_n_median_ratio = per_n.back().median_ratio;
  trend.smallest_n_median_ratio = per_n.front().median_ratio;
  return trend;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.grid.empty()) throw std::invalid_argument("run_experiment: empty n grid");
  if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");

  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.config = cfg;

  const std::size_t total = cfg.grid.size() * cfg.trials;
  report.trials.resize(total);

  unsigned threads = cfg.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  report.threads_used = threads;

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= total || failed.load()) return;
      const std::size_t gi = k / cfg.trials;
      const std::size_t ti = k % cfg.trials;
      TrialConfig tc;
      tc.n = cfg.grid[gi];
      tc.d = cfg.d;
      tc.p = cfg.p;
      tc.l = cfg.l;
      tc.density = cfg.density;
      tc.schedule = cfg.schedule;
      tc.seed = mix_seed(cfg.base_seed, gi, ti);
      tc.policy = cfg.policy;
      try {
        report.trials[k] = run_trial(tc);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failed.exchange(true))
          failure = "trial seed " + std::to_string(tc.seed) + " (n=" + std::to_string(tc.n) +
                    "): " + e.what();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("run_experiment: " + failure);

  report.per_n = aggregate_per_n(cfg, report.trials);
  report.trend = compute_trend(report.per_n);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace rgg
