#pragma once

#include <optional>
#include <vector>

#include "laga/graph.hpp"

namespace laga {

/// map[level][i] is the index in the second graph of vertex (level, i).
using VertexMap = std::vector<std::vector<std::size_t>>;

/// Level-preserving isomorphism search. A returned map has been checked to
/// carry the edge set of g1 exactly onto that of g2.
std::optional<VertexMap> are_isomorphic(const LayeredGraph& g1, const LayeredGraph& g2);

bool is_isomorphism(const LayeredGraph& g1, const LayeredGraph& g2, const VertexMap& map);

}  // namespace laga
