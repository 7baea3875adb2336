#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rgg/clique.hpp"
#include "rgg/graph.hpp"
#include "rgg/io.hpp"
#include "rgg/rng.hpp"

using namespace rgg;

namespace {

PointCloud cloud_from(std::vector<double> coords, int d, double r,
                      LpNorm p = LpNorm::l2()) {
  PointCloud c;
  c.dim = d;
  c.radius = r;
  c.norm = p;
  c.coords = std::move(coords);
  return c;
}

PointCloud random_cloud(std::size_t n, int d, double r, LpNorm p, std::uint64_t seed) {
  return sample_points(n, DensitySpec::uniform_cube(), d, seed, r, p);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(static_cast<std::size_t>(n), edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(static_cast<std::size_t>(n), edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(static_cast<std::size_t>(n), edges);
}

Graph petersen() {
  // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return make_graph(10, edges);
}

}  // namespace

TEST_CASE("boundary distance is not an edge (strict inequality)") {
  const PointCloud c = cloud_from({0.0, 0.0, 1.0, 0.0}, 2, 1.0);
  const Graph g = build_graph(c);
  CHECK(g.edge_count == 0);
  const Graph gb = build_graph_bruteforce(c);
  CHECK(gb.edge_count == 0);
}

TEST_CASE("points below the radius are adjacent") {
  const PointCloud c = cloud_from({0.0, 0.0, 0.5, 0.0}, 2, 1.0);
  const Graph g = build_graph(c);
  CHECK(g.edge_count == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("single point yields the one-vertex graph") {
  const PointCloud c = cloud_from({0.3, 0.7}, 2, 1.0);
  const Graph g = build_graph(c);
  CHECK(g.n == 1);
  CHECK(g.edge_count == 0);
}

TEST_CASE("pairwise-far points give the empty graph, tight cluster the clique") {
  PointCloud far = cloud_from({0.0, 0.0, 10.0, 0.0, 0.0, 10.0, 10.0, 10.0}, 2, 1.0);
  CHECK(build_graph_bruteforce(far).edge_count == 0);
  CHECK(build_graph(far).edge_count == 0);

  // 6 points inside a ball of radius r/2: diameter < r forces the clique
  PointCloud tight = cloud_from(
      {0.0, 0.0, 0.1, 0.0, 0.0, 0.1, -0.1, 0.0, 0.0, -0.1, 0.05, 0.05}, 2, 1.0);
  const Graph g = build_graph(tight);
  CHECK(g.edge_count == 15);
  CHECK(build_graph_bruteforce(tight) == g);
}

TEST_CASE("cell-list construction equals brute force on random clouds") {
  const double ps[] = {1.0, 2.0, std::numeric_limits<double>::infinity()};
  std::uint64_t seed = 1000;
  for (int d = 1; d <= 3; ++d) {
    for (const double pval : ps) {
      for (int rep = 0; rep < 3; ++rep) {
        // radius chosen to put average degree near 8
        const std::size_t n = 200;
        const double r = 0.5 * std::pow(8.0 / static_cast<double>(n), 1.0 / d);
        const PointCloud c = random_cloud(n, d, r, LpNorm(pval), seed++);
        const Graph fast = build_graph(c);
        const Graph slow = build_graph_bruteforce(c);
        REQUIRE(fast == slow);
      }
    }
  }
}

TEST_CASE("graph_power examples") {
  const Graph p3 = path_graph(3);
  const Graph sq = graph_power(p3, 2);
  CHECK(sq.edge_count == 3);  // a-b-c squares to the triangle
  CHECK(sq.has_edge(0, 2));

  const Graph same = graph_power(p3, 1);
  CHECK(same == p3);

  // an isolated vertex stays isolated at any l
  const Graph eb = make_graph(3, {{0, 1}});
  const Graph e5 = graph_power(eb, 5);
  CHECK(e5.edge_count == 1);
  CHECK(e5.degree(2) == 0);
}

TEST_CASE("graph_power edge sets are nested in l") {
  for (int rep = 0; rep < 10; ++rep) {
    const PointCloud c = random_cloud(80, 2, 0.12, LpNorm::l2(), 4000 + rep);
    const Graph g = build_graph(c);
    Graph prev = g;
    for (int l = 2; l <= 4; ++l) {
      const Graph cur = graph_power(g, l);
      CHECK(edges_subset(prev, cur));
      prev = cur;
    }
  }
}

TEST_CASE("power of the radius-r graph sits inside the radius-l*r graph") {
  for (int rep = 0; rep < 10; ++rep) {
    const PointCloud c = random_cloud(120, 2, 0.1, LpNorm::l2(), 5000 + rep);
    const Graph g = build_graph(c);
    for (int l = 2; l <= 3; ++l) {
      const Graph power = graph_power(g, l);
      const Graph wide = build_graph(c, l * c.radius);
      CHECK(edges_subset(power, wide));
    }
  }
}

TEST_CASE("max_degree examples") {
  CHECK(max_degree(complete_graph(4)) == 3);
  // star K_{1,5}
  const Graph star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(max_degree(star) == 5);
  CHECK(max_degree(make_graph(3, {})) == 0);
}

TEST_CASE("clique_number on fixtures") {
  const CliqueResult k4 = clique_number(complete_graph(4));
  CHECK(k4.size == 4);
  CHECK(k4.exact);

  const CliqueResult c5 = clique_number(cycle_graph(5));
  CHECK(c5.size == 2);
  CHECK(c5.exact);

  // brute-force triple enumeration confirms the Petersen graph is
  // triangle-free before trusting the solver
  const Graph pet = petersen();
  bool triangle = false;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c)
        if (pet.has_edge(a, b) && pet.has_edge(b, c) && pet.has_edge(a, c)) triangle = true;
  REQUIRE_FALSE(triangle);
  const CliqueResult pr = clique_number(pet);
  CHECK(pr.size == 2);
  CHECK(pr.exact);
}

TEST_CASE("clique witness is a clique and budget exhaustion is flagged") {
  for (int rep = 0; rep < 8; ++rep) {
    const PointCloud c = random_cloud(150, 2, 0.2, LpNorm::l2(), 6000 + rep);
    const Graph g = build_graph(c);
    const CliqueResult res = clique_number(g);
    REQUIRE(res.size == static_cast<int>(res.witness.size()));
    for (std::size_t i = 0; i < res.witness.size(); ++i)
      for (std::size_t j = i + 1; j < res.witness.size(); ++j)
        CHECK(g.has_edge(res.witness[i], res.witness[j]));
  }

  // a tiny budget cannot finish but must still return a valid clique
  const PointCloud c = random_cloud(300, 2, 0.15, LpNorm::l2(), 77);
  const Graph g = build_graph(c);
  const CliqueResult tight = clique_number(g, 10);
  CHECK_FALSE(tight.exact);
  CHECK(tight.size >= 1);
  const CliqueResult loose = clique_number(g);
  CHECK(loose.size >= tight.size);
}

TEST_CASE("make_graph validates input") {
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("edgelist round-trip reconstructs adjacency") {
  for (int rep = 0; rep < 6; ++rep) {
    const PointCloud c = random_cloud(90, 2, 0.15, LpNorm::l2(), 900 + rep);
    const Graph g = build_graph(c);
    const std::string text = to_edgelist(g);
    std::istringstream in(text);
    const Graph back = read_edgelist(in);
    CHECK(back == g);
  }
}

TEST_CASE("edgelist emits the exact documented bytes") {
  const PointCloud c = cloud_from({0.0, 0.0, 0.5, 0.0}, 2, 1.0);
  const Graph g = build_graph(c);
  CHECK(to_edgelist(g) == "2 1\n0 1\n");
}
