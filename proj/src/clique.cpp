#include "rgg/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgg {

namespace {

// cheap seed: grow a clique from start greedily, always taking the candidate
// with the largest degree (lowest index on ties)
std::vector<int> greedy_clique_from(const Graph& g, int start) {
  std::vector<int> clique{start};
  std::vector<int> cand = g.adj[static_cast<std::size_t>(start)];
  std::vector<int> next;
  while (!cand.empty()) {
    int pick = cand[0];
    for (const int u : cand)
      if (g.degree(static_cast<std::size_t>(u)) > g.degree(static_cast<std::size_t>(pick))) pick = u;
    clique.push_back(pick);
    next.clear();
    const auto& np = g.adj[static_cast<std::size_t>(pick)];
    for (const int u : cand)
      if (u != pick && std::binary_search(np.begin(), np.end(), u)) next.push_back(u);
    cand.swap(next);
  }
  return clique;
}

struct Searcher {
  const Graph& g;
  std::uint64_t work = 0;
  std::uint64_t budget;
  bool exhausted = false;
  std::vector<int> best;
  std::vector<int> current;
  std::vector<std::vector<int>> classes;

  Searcher(const Graph& g_in, std::uint64_t budget_in) : g(g_in), budget(budget_in) {}

  // greedy-color cand and reorder it by color class; colors[k] is the 1-based
  // color of cand[k], an upper bound on the clique size within cand[0..k]
  void color_sort(std::vector<int>& cand, std::vector<int>& colors) {
    std::size_t used = 0;
    for (const int v : cand) {
      std::size_t c = 0;
      for (; c < used; ++c) {
        bool conflict = false;
        for (const int u : classes[c]) {
          ++work;
          if (g.has_edge(v, u)) {
            conflict = true;
            break;
          }
        }
        if (!conflict) break;
      }
      if (c == used) {
        if (classes.size() <= used) classes.emplace_back();
        ++used;
      }
      classes[c].push_back(v);
    }
    cand.clear();
    colors.clear();
    for (std::size_t c = 0; c < used; ++c) {
      for (const int v : classes[c]) {
        cand.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
      classes[c].clear();
    }
  }

  void expand(std::vector<int>& cand) {
    if (work >= budget) {
      exhausted = true;
      return;
    }
    work += 1 + cand.size();
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    std::vector<int> colors;
    color_sort(cand, colors);
    for (std::size_t k = cand.size(); k-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colors[k]) <= best.size()) return;
      const int v = cand[k];
      current.push_back(v);
      std::vector<int> next;
      next.reserve(k);
      const auto& nv = g.adj[static_cast<std::size_t>(v)];
      work += k;
      for (std::size_t t = 0; t < k; ++t)
        if (std::binary_search(nv.begin(), nv.end(), cand[t])) next.push_back(cand[t]);
      expand(next);
      current.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

CliqueResult clique_number(const Graph& g, std::uint64_t budget) {
  if (g.n < 1) throw std::invalid_argument("clique_number: empty graph");

  Searcher s(g, budget);

  // seed the incumbent from a few high-degree vertices so the bound is decent
  // even when the budget runs out early on large instances
  {
    std::vector<int> by_degree(g.n);
    for (std::size_t v = 0; v < g.n; ++v) by_degree[v] = static_cast<int>(v);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
      const auto da = g.degree(static_cast<std::size_t>(a)), db = g.degree(static_cast<std::size_t>(b));
      return da != db ? da > db : a < b;
    });
    const std::size_t seeds = std::min<std::size_t>(g.n, 8);
    for (std::size_t k = 0; k < seeds; ++k) {
      std::vector<int> c = greedy_clique_from(g, by_degree[k]);
      if (c.size() > s.best.size()) s.best = c;
    }
  }

  const std::vector<int> order = degeneracy_order(g);
  std::vector<std::size_t> rank(g.n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[static_cast<std::size_t>(order[k])] = k;

  // roots in degeneracy order, candidates restricted to later neighbors
  for (std::size_t k = 0; k < order.size() && !s.exhausted; ++k) {
    const int v = order[k];
    std::vector<int> cand;
    for (const int u : g.adj[static_cast<std::size_t>(v)])
      if (rank[static_cast<std::size_t>(u)] > k) cand.push_back(u);
    if (cand.size() + 1 <= s.best.size()) continue;
    s.current.assign(1, v);
    s.expand(cand);
  }

  CliqueResult res;
  res.witness = s.best;
  std::sort(res.witness.begin(), res.witness.end());
  res.size = static_cast<int>(s.best.size());
  res.exact = !s.exhausted;
  return res;
}

}  // namespace rgg
