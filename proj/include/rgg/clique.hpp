#ifndef RGG_CLIQUE_HPP
#define RGG_CLIQUE_HPP

#include <cstdint>
#include <vector>

#include "rgg/graph.hpp"

namespace rgg {

struct CliqueResult {
  int size = 0;      // size of the best clique found; equals omega when exact
  bool exact = false;
  std::vector<int> witness;
};

// Branch-and-bound maximum clique: degeneracy-ordered roots, greedy-coloring
// upper bound inside the search. budget caps node expansions; exhausting it
// is a normal outcome and yields the best clique found with exact = false.
CliqueResult clique_number(const Graph& g, std::uint64_t budget = 500'000);

}  // namespace rgg

#endif  // RGG_CLIQUE_HPP
