#include "random_graphs.hpp"

#include "laga/combinatorics.hpp"

namespace laga::testing {

LayeredGraph random_layered(Rng& rng, std::size_t max_levels, std::size_t max_per_level) {
  std::size_t num_levels = 2 + pick(rng, max_levels - 1);
  std::vector<std::size_t> levels{1};
  for (std::size_t l = 1; l < num_levels; ++l) levels.push_back(1 + pick(rng, max_per_level));
  std::vector<Edge> edges;
  for (std::size_t l = 1; l < num_levels; ++l)
    for (std::size_t i = 0; i < levels[l]; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < levels[l - 1]; ++j)
        if (rng() % 2) {
          edges.push_back({{l, i}, {l - 1, j}});
          any = true;
        }
      if (!any) edges.push_back({{l, i}, {l - 1, pick(rng, levels[l - 1])}});
    }
  return LayeredGraph::build(levels, edges, {true, true});
}

LayeredGraph random_uniform(Rng& rng, std::size_t max_levels, std::size_t max_per_level) {
  while (true) {
    auto g = random_layered(rng, max_levels, max_per_level);
    if (is_uniform(g).uniform) return g;
  }
}

std::vector<VertexId> random_subset(Rng& rng, const LayeredGraph& g, std::size_t level) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.level_size(level); ++i)
    if (rng() % 2) out.push_back({level, i});
  return out;
}

}  // namespace laga::testing
