#ifndef RGG_COLORING_HPP
#define RGG_COLORING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgg/graph.hpp"

namespace rgg {

enum class ColoringMethod { GreedyGiven, GreedySmallestLast, GreedyRandom, Dsatur, Exact };

std::string method_name(ColoringMethod m);

// Proper vertex coloring, 0-based color indices. Color classes are labeled in
// first-occurrence order (by vertex index), so identical runs produce
// identical assignments.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
  ColoringMethod method = ColoringMethod::GreedyGiven;
};

// proper for g, colors in [0, num_colors), num_colors = 1 + max color, every
// class nonempty
bool is_proper(const Graph& g, const Coloring& c);

// Sequential greedy in the given vertex order (must be a permutation).
// Uses at most max_degree(g) + 1 colors.
Coloring greedy_color(const Graph& g, std::span<const int> order);

// greedy in smallest-last order (reverse degeneracy order)
Coloring greedy_color_smallest_last(const Graph& g);

// greedy in a seed-deterministic uniformly shuffled order
Coloring greedy_color_random(const Graph& g, std::uint64_t seed);

// DSATUR: repeatedly colors the vertex with the most distinct neighbor
// colors; ties by higher degree, then lower index. Deterministic.
Coloring dsatur(const Graph& g);

// Two-sided chromatic bound. exact means upper is the chromatic number
// (and then lower == upper).
struct ChromaticEstimate {
  int lower = 1;
  int upper = 1;
  bool exact = false;
};

// Branch-and-bound exact chromatic number: DSATUR-ordered search seeded with
// a DSATUR upper bound and a clique lower bound. budget caps search work;
// exhausting it returns the best bounds found with exact = false. A non-null
// witness receives the best coloring encountered.
ChromaticEstimate exact_chromatic(const Graph& g, std::uint64_t budget = 50'000'000,
                                  Coloring* witness = nullptr);

// Exhaustive oracle over canonical color assignments; n <= 10 only.
int chromatic_bruteforce(const Graph& g);

enum class ChromaticMethod { Exact, Dsatur, Greedy };

struct EstimateOptions {
  ChromaticMethod method = ChromaticMethod::Dsatur;
  std::uint64_t exact_budget = 50'000'000;
  std::uint64_t clique_budget = 20'000'000;
};

// [clique lower, heuristic-or-exact upper] on g itself
ChromaticEstimate chromatic_estimate(const Graph& g, const EstimateOptions& opts);

// The same estimate on graph_power(g, l); for l = 1 this is the estimate on
// g. Nondecreasing in l when exact (power edge sets are nested).
ChromaticEstimate distant_chromatic(const Graph& g, int l, const EstimateOptions& opts);

}  // namespace rgg

#endif  // RGG_COLORING_HPP
