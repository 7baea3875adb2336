#include "rgg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "rgg/clique.hpp"
#include "rgg/rng.hpp"

namespace rgg {

std::string method_name(ColoringMethod m) {
  switch (m) {
    case ColoringMethod::GreedyGiven:
      return "greedy-given";
    case ColoringMethod::GreedySmallestLast:
      return "greedy-smallest-last";
    case ColoringMethod::GreedyRandom:
      return "greedy-random";
    case ColoringMethod::Dsatur:
      return "dsatur";
    case ColoringMethod::Exact:
      return "exact";
  }
  throw std::logic_error("method_name: bad method");
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.n || c.num_colors < 1) return false;
  int max_color = -1;
  std::vector<char> seen(static_cast<std::size_t>(c.num_colors), 0);
  for (std::size_t v = 0; v < g.n; ++v) {
    const int cv = c.colors[v];
    if (cv < 0 || cv >= c.num_colors) return false;
    seen[static_cast<std::size_t>(cv)] = 1;
    max_color = std::max(max_color, cv);
    for (const int u : g.adj[v])
      if (c.colors[static_cast<std::size_t>(u)] == cv) return false;
  }
  if (max_color + 1 != c.num_colors) return false;
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

Coloring greedy_color(const Graph& g, std::span<const int> order) {
  const std::size_t n = g.n;
  if (n < 1) throw std::invalid_argument("greedy_color: empty graph");
  if (order.size() != n) throw std::invalid_argument("greedy_color: ordering has wrong length");
  {
    std::vector<char> seen(n, 0);
    for (const int v : order) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("greedy_color: ordering is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  Coloring out;
  out.method = ColoringMethod::GreedyGiven;
  out.colors.assign(n, -1);
  std::vector<int> mark(n + 1, -1);  // mark[c] == v means color c is blocked at v
  int used = 0;
  for (const int v : order) {
    const auto vu = static_cast<std::size_t>(v);
    for (const int u : g.adj[vu]) {
      const int cu = out.colors[static_cast<std::size_t>(u)];
      if (cu >= 0) mark[static_cast<std::size_t>(cu)] = v;
    }
    int c = 0;
    while (mark[static_cast<std::size_t>(c)] == v) ++c;
    out.colors[vu] = c;
    used = std::max(used, c + 1);
  }
  out.num_colors = used;
  return out;
}

Coloring greedy_color_smallest_last(const Graph& g) {
  std::vector<int> order = degeneracy_order(g);
  std::reverse(order.begin(), order.end());
  Coloring c = greedy_color(g, order);
  c.method = ColoringMethod::GreedySmallestLast;
  return c;
}

Coloring greedy_color_random(const Graph& g, std::uint64_t seed) {
  std::vector<int> order(g.n);
  for (std::size_t v = 0; v < g.n; ++v) order[v] = static_cast<int>(v);
  SplitMix64 rng(seed);
  for (std::size_t k = g.n; k > 1; --k)
    std::swap(order[k - 1], order[rng.below(k)]);
  Coloring c = greedy_color(g, order);
  c.method = ColoringMethod::GreedyRandom;
  return c;
}

Coloring dsatur(const Graph& g) {
  const std::size_t n = g.n;
  if (n < 1) throw std::invalid_argument("dsatur: empty graph");

  const std::size_t palette = max_degree(g) + 2;
  const std::size_t words = (palette + 63) / 64;
  std::vector<std::uint64_t> seen(n * words, 0);  // colors present in the neighborhood
  std::vector<int> sat(n, 0);
  Coloring out;
  out.method = ColoringMethod::Dsatur;
  out.colors.assign(n, -1);

  // max-heap over (saturation, degree, lowest index); lazy entries, re-pushed
  // whenever a vertex's saturation grows
  using Key = std::tuple<int, int, int>;  // (sat, deg, -v)
  std::priority_queue<Key> heap;
  for (std::size_t v = 0; v < n; ++v)
    heap.emplace(0, static_cast<int>(g.degree(v)), -static_cast<int>(v));

  int used = 0;
  std::size_t colored = 0;
  while (colored < n) {
    const auto [s, d, nv] = heap.top();
    heap.pop();
    const auto v = static_cast<std::size_t>(-nv);
    if (out.colors[v] >= 0 || s != sat[v]) continue;  // stale

    const std::uint64_t* row = seen.data() + v * words;
    int c = 0;
    for (std::size_t w = 0; w < words; ++w) {
      if (~row[w] != 0) {
        c = static_cast<int>(w * 64) + std::countr_one(row[w]);
        break;
      }
    }
    out.colors[v] = c;
    used = std::max(used, c + 1);
    ++colored;

    for (const int u : g.adj[v]) {
      const auto uu = static_cast<std::size_t>(u);
      if (out.colors[uu] >= 0) continue;
      std::uint64_t& word = seen[uu * words + static_cast<std::size_t>(c) / 64];
      const std::uint64_t bit = std::uint64_t{1} << (static_cast<std::size_t>(c) % 64);
      if (!(word & bit)) {
        word |= bit;
        ++sat[uu];
        heap.emplace(sat[uu], static_cast<int>(g.degree(uu)), -u);
      }
    }
  }
  out.num_colors = used;
  return out;
}

namespace {

// Depth-first search for colorings with fewer colors than the incumbent.
// Saturation bookkeeping mirrors DSATUR; counts[v*palette+c] is the number of
// neighbors of v currently colored c.
struct ExactSearch {
  const Graph& g;
  std::size_t palette;
  std::vector<std::uint16_t> counts;
  std::vector<int> sat;
  std::vector<int> colors;
  std::vector<int> best_colors;
  int best;
  std::uint64_t work = 0;
  std::uint64_t budget;
  bool exhausted = false;
  int lower;

  ExactSearch(const Graph& g_in, int ub, int lb, std::uint64_t budget_in)
      : g(g_in),
        palette(static_cast<std::size_t>(ub)),
        counts(g_in.n * static_cast<std::size_t>(ub), 0),
        sat(g_in.n, 0),
        colors(g_in.n, -1),
        best(ub),
        budget(budget_in),
        lower(lb) {}

  void assign(std::size_t v, int c) {
    colors[v] = c;
    for (const int u : g.adj[v]) {
      const auto uu = static_cast<std::size_t>(u);
      if (++counts[uu * palette + static_cast<std::size_t>(c)] == 1) ++sat[uu];
    }
  }

  void unassign(std::size_t v, int c) {
    colors[v] = -1;
    for (const int u : g.adj[v]) {
      const auto uu = static_cast<std::size_t>(u);
      if (--counts[uu * palette + static_cast<std::size_t>(c)] == 0) --sat[uu];
    }
  }

  void dfs(std::size_t colored, int used) {
    if (exhausted || best == lower) return;
    if (work >= budget) {
      exhausted = true;
      return;
    }
    if (colored == g.n) {
      best = used;
      best_colors = colors;
      return;
    }
    // next vertex: max saturation, then max degree, then min index
    std::size_t v = g.n;
    int vsat = -1, vdeg = -1;
    for (std::size_t u = 0; u < g.n; ++u) {
      if (colors[u] >= 0) continue;
      const int du = static_cast<int>(g.degree(u));
      if (sat[u] > vsat || (sat[u] == vsat && du > vdeg)) {
        v = u;
        vsat = sat[u];
        vdeg = du;
      }
    }
    work += g.n + g.degree(v);

    const int cap = std::min(used + 1, best - 1);  // colors 0..cap-1 may be tried
    for (int c = 0; c < cap; ++c) {
      if (counts[v * palette + static_cast<std::size_t>(c)] != 0) continue;
      assign(v, c);
      dfs(colored + 1, std::max(used, c + 1));
      unassign(v, c);
      if (exhausted || best == lower) return;
    }
  }
};

void canonicalize(Coloring& c) {
  std::vector<int> relabel(static_cast<std::size_t>(c.num_colors), -1);
  int next = 0;
  for (int& cv : c.colors) {
    if (relabel[static_cast<std::size_t>(cv)] < 0) relabel[static_cast<std::size_t>(cv)] = next++;
    cv = relabel[static_cast<std::size_t>(cv)];
  }
  c.num_colors = next;
}

}  // namespace

ChromaticEstimate exact_chromatic(const Graph& g, std::uint64_t budget, Coloring* witness) {
  if (g.n < 1) throw std::invalid_argument("exact_chromatic: empty graph");

  const CliqueResult clq = clique_number(g, std::max<std::uint64_t>(budget / 8, 10'000));
  Coloring ub = dsatur(g);
  int lower = clq.size;
  int upper = ub.num_colors;

  if (lower >= upper) {
    if (witness) *witness = ub;
    return {upper, upper, true};
  }

  ExactSearch search(g, upper, lower, budget);
  search.dfs(0, 0);

  if (!search.best_colors.empty()) {
    ub.colors = search.best_colors;
    ub.num_colors = search.best;
    canonicalize(ub);
    upper = ub.num_colors;
  }
  const bool exact = !search.exhausted;
  if (exact) lower = upper;  // completed search certifies upper
  if (witness) {
    ub.method = exact ? ColoringMethod::Exact : ColoringMethod::Dsatur;
    *witness = ub;
  }
  return {lower, upper, exact};
}

int chromatic_bruteforce(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("chromatic_bruteforce: empty graph");
  if (g.n > 10) throw std::invalid_argument("chromatic_bruteforce: n must be <= 10");

  // canonical assignments: vertex i may only open color max_used+1
  struct Rec {
    const Graph& g;
    int k;
    std::vector<int> colors;
    bool run(std::size_t v, int used) {
      if (v == g.n) return true;
      const int cap = std::min(used + 1, k);
      for (int c = 0; c < cap; ++c) {
        bool ok = true;
        for (const int u : g.adj[v]) {
          if (static_cast<std::size_t>(u) < v && colors[static_cast<std::size_t>(u)] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        colors[v] = c;
        if (run(v + 1, std::max(used, c + 1))) return true;
        colors[v] = -1;
      }
      return false;
    }
  };

  for (int k = 1; k <= static_cast<int>(g.n); ++k) {
    Rec rec{g, k, std::vector<int>(g.n, -1)};
    if (rec.run(0, 0)) return k;
  }
  return static_cast<int>(g.n);  // unreachable: n colors always suffice
}

ChromaticEstimate chromatic_estimate(const Graph& g, const EstimateOptions& opts) {
  switch (opts.method) {
    case ChromaticMethod::Exact:
      return exact_chromatic(g, opts.exact_budget);
    case ChromaticMethod::Dsatur: {
      const int upper = dsatur(g).num_colors;
      const int lower = clique_number(g, opts.clique_budget).size;
      return {lower, upper, lower == upper};
    }
    case ChromaticMethod::Greedy: {
      const int upper = greedy_color_smallest_last(g).num_colors;
      const int lower = clique_number(g, opts.clique_budget).size;
      return {lower, upper, lower == upper};
    }
  }
  throw std::logic_error("chromatic_estimate: bad method");
}

ChromaticEstimate distant_chromatic(const Graph& g, int l, const EstimateOptions& opts) {
  if (l < 1) throw std::invalid_argument("distant_chromatic: l must be >= 1");
  const Graph power = graph_power(g, l);
  return chromatic_estimate(power, opts);
}

}  // namespace rgg
