#pragma once

#include <cstdint>
#include <vector>

#include "laga/graph.hpp"

namespace laga {

/// Subsets of {1..n} ordered by inclusion; level i lists the i-subsets in
/// lexicographic order.
LayeredGraph build_boolean(std::size_t n);

/// Subspaces of F_q^n ordered by inclusion, q prime. Within a level the
/// vertices are sorted by their reduced row echelon matrices, compared as
/// flattened entry sequences.
LayeredGraph build_subspace_lattice(std::uint32_t q, std::size_t n);

/// Each vertex on level i+1 covers every vertex on level i.
LayeredGraph build_complete_layered(const std::vector<std::size_t>& sizes);

/// Reduced echelon bases of all k-dimensional subspaces of F_q^n, in the
/// vertex order used by build_subspace_lattice.
std::vector<std::vector<std::vector<std::uint32_t>>> echelon_subspaces(std::uint32_t q, std::size_t n, std::size_t k);

}  // namespace laga
