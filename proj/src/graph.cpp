#include "rgg/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "rgg/cell_grid.hpp"

namespace rgg {

bool Graph::has_edge(int i, int j) const {
  const auto& row = adj[static_cast<std::size_t>(i)];
  return std::binary_search(row.begin(), row.end(), j);
}

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  g.adj.resize(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
      throw std::invalid_argument("make_graph: vertex index out of range");
    if (i == j) throw std::invalid_argument("make_graph: self-loop");
    g.adj[static_cast<std::size_t>(i)].push_back(j);
    g.adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("make_graph: duplicate edge");
    g.edge_count += row.size();
  }
  g.edge_count /= 2;
  return g;
}

Graph build_graph(const PointCloud& cloud) { return build_graph(cloud, cloud.radius); }

Graph build_graph(const PointCloud& cloud, double radius) {
  const std::size_t n = cloud.size();
  if (n < 1) throw std::invalid_argument("build_graph: cloud is empty");
  if (!(radius > 0.0)) throw std::invalid_argument("build_graph: radius must be > 0");

  Graph g;
  g.n = n;
  g.adj.resize(n);

  const CellGrid grid(cloud, radius);
  for (std::size_t i = 0; i < n; ++i) {
    grid.visit_candidates(i, [&](std::size_t j) {
      if (j <= i) return;
      if (lp_distance(cloud.point(i), cloud.point(j), cloud.norm) < radius) {
        g.adj[i].push_back(static_cast<int>(j));
        g.adj[j].push_back(static_cast<int>(i));
      }
    });
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    g.edge_count += row.size();
  }
  g.edge_count /= 2;
  return g;
}

Graph build_graph_bruteforce(const PointCloud& cloud) {
  return build_graph_bruteforce(cloud, cloud.radius);
}

Graph build_graph_bruteforce(const PointCloud& cloud, double radius) {
  const std::size_t n = cloud.size();
  if (n < 1) throw std::invalid_argument("build_graph_bruteforce: cloud is empty");
  if (!(radius > 0.0)) throw std::invalid_argument("build_graph_bruteforce: radius must be > 0");

  Graph g;
  g.n = n;
  g.adj.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lp_distance(cloud.point(i), cloud.point(j), cloud.norm) < radius) {
        g.adj[i].push_back(static_cast<int>(j));
        g.adj[j].push_back(static_cast<int>(i));
      }
    }
  }
  for (auto& row : g.adj) {
    // rows are already sorted by construction
    g.edge_count += row.size();
  }
  g.edge_count /= 2;
  return g;
}

Graph graph_power(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("graph_power: l must be >= 1");
  if (l == 1) return g;

  Graph out;
  out.n = g.n;
  out.adj.resize(g.n);

  std::vector<int> depth(g.n, -1);
  std::vector<int> frontier, next, reached;
  for (std::size_t src = 0; src < g.n; ++src) {
    frontier.clear();
    reached.clear();
    frontier.push_back(static_cast<int>(src));
    depth[src] = 0;
    for (int hop = 1; hop <= l && !frontier.empty(); ++hop) {
      next.clear();
      for (const int u : frontier) {
        for (const int v : g.adj[static_cast<std::size_t>(u)]) {
          if (depth[static_cast<std::size_t>(v)] < 0) {
            depth[static_cast<std::size_t>(v)] = hop;
            next.push_back(v);
            reached.push_back(v);
          }
        }
      }
      frontier.swap(next);
    }
    std::sort(reached.begin(), reached.end());
    out.adj[src] = reached;
    out.edge_count += reached.size();
    depth[src] = -1;
    for (const int v : out.adj[src]) depth[static_cast<std::size_t>(v)] = -1;
  }
  out.edge_count /= 2;
  return out;
}

std::size_t max_degree(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("max_degree: empty graph");
  std::size_t best = 0;
  for (const auto& row : g.adj) best = std::max(best, row.size());
  return best;
}

std::vector<int> degeneracy_order(const Graph& g) {
  const std::size_t n = g.n;
  std::vector<int> deg(n);
  std::size_t maxdeg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.degree(v));
    maxdeg = std::max(maxdeg, g.degree(v));
  }
  std::vector<std::vector<int>> buckets(maxdeg + 1);
  for (std::size_t v = n; v-- > 0;)
    buckets[static_cast<std::size_t>(deg[v])].push_back(static_cast<int>(v));

  std::vector<char> removed(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::size_t cur = 0;
  while (order.size() < n) {
    while (cur <= maxdeg && buckets[cur].empty()) ++cur;
    const int v = buckets[cur].back();
    buckets[cur].pop_back();
    const auto vu = static_cast<std::size_t>(v);
    if (removed[vu] || deg[vu] != static_cast<int>(cur)) continue;  // stale entry
    removed[vu] = 1;
    order.push_back(v);
    for (const int u : g.adj[vu]) {
      const auto uu = static_cast<std::size_t>(u);
      if (!removed[uu]) {
        --deg[uu];
        buckets[static_cast<std::size_t>(deg[uu])].push_back(u);
        cur = std::min(cur, static_cast<std::size_t>(deg[uu]));
      }
    }
  }
  return order;
}

bool edges_subset(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  for (std::size_t v = 0; v < a.n; ++v)
    if (!std::includes(b.adj[v].begin(), b.adj[v].end(), a.adj[v].begin(), a.adj[v].end()))
      return false;
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n == b.n && a.edge_count == b.edge_count && a.adj == b.adj;
}

}  // namespace rgg
