#ifndef RGG_GRAPH_HPP
#define RGG_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rgg/cloud.hpp"

namespace rgg {

// Immutable simple graph: per-vertex strictly sorted neighbor lists, no
// self-loops, symmetric. Safe to share across threads once built.
struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<int>> adj;
  std::size_t edge_count = 0;

  std::size_t degree(std::size_t v) const { return adj[v].size(); }
  bool has_edge(int i, int j) const;
};

// Builds a graph from an unordered edge list; validates indices, drops
// nothing, rejects self-loops and duplicates.
Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

// Geometric graph: edge {i,j} iff lp_distance(x_i, x_j, p) < radius, strict.
// Cell-grid construction; radius defaults to the cloud's own.
Graph build_graph(const PointCloud& cloud);
Graph build_graph(const PointCloud& cloud, double radius);

// O(n^2) oracle with the identical output contract.
Graph build_graph_bruteforce(const PointCloud& cloud);
Graph build_graph_bruteforce(const PointCloud& cloud, double radius);

// l-th power: edge {i,j} iff 0 < d_G(i,j) <= l, by depth-limited BFS from
// every vertex. l = 1 returns a copy of g.
Graph graph_power(const Graph& g, int l);

std::size_t max_degree(const Graph& g);

// Removal order that repeatedly deletes a minimum-degree vertex (lowest index
// on ties). Reversing it gives the smallest-last coloring order; restricting
// neighbors to later positions bounds clique-search subproblems.
std::vector<int> degeneracy_order(const Graph& g);

// true iff every edge of a is an edge of b (vertex counts must match)
bool edges_subset(const Graph& a, const Graph& b);

bool operator==(const Graph& a, const Graph& b);

}  // namespace rgg

#endif  // RGG_GRAPH_HPP
