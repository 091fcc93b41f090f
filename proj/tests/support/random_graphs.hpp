#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "laga/graph.hpp"

namespace laga::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Unique minimal vertex, every vertex above level 0 covers at least one vertex.
LayeredGraph random_layered(Rng& rng, std::size_t max_levels, std::size_t max_per_level);
/// As above, resampled until uniform.
LayeredGraph random_uniform(Rng& rng, std::size_t max_levels, std::size_t max_per_level);

/// Random subset of a level.
std::vector<VertexId> random_subset(Rng& rng, const LayeredGraph& g, std::size_t level);

}  // namespace laga::testing
