#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "laga/graph.hpp"

namespace laga {

/// S(T): every vertex covered by some member of T. All of T must sit on
/// `level` (MixedLevels otherwise); the result lies on level - 1.
std::vector<VertexId> successors(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T);

/// Classes on level - 1 of the closure of "covered by a common member of T".
struct ClassPartition {
  std::size_t ground_level = 0;
  std::vector<std::size_t> source;                ///< indices of T on ground_level + 1
  std::vector<std::vector<std::size_t>> classes;  ///< sorted, ordered by least member
  std::vector<std::size_t> class_of;              ///< class number per ground vertex
  std::size_t touching = 0;                       ///< classes meeting S(T)

  std::size_t k() const noexcept { return classes.size(); }
  std::size_t k_touching() const noexcept { return touching; }
};

ClassPartition class_partition(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T);

struct IdentityReport {
  std::size_t ground_size = 0;      ///< |V_{n-1}|
  std::size_t k_empty = 0;          ///< classes for the empty source
  std::size_t k = 0;                ///< k_T
  std::size_t k_touching = 0;       ///< k_T^T
  std::size_t successor_count = 0;  ///< |S(T)|
  std::size_t uncovered = 0;        ///< |V_{n-1} \ S(T)|
};

/// Computes the six counts and checks the three identities linking them;
/// throws std::logic_error if any fails.
IdentityReport check_identities(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T);

struct UniformityReport {
  bool uniform = true;
  std::optional<VertexId> witness;
  /// Classes of S(witness) (as indices one level down) when not uniform.
  std::vector<std::vector<std::size_t>> split_classes;
};

/// For each vertex of level >= 2, successors sharing a successor are linked;
/// uniform when every such linkage is connected.
UniformityReport is_uniform(const LayeredGraph& g);
/// Independent check by breadth-first search over down-up steps.
bool is_uniform_downup(const LayeredGraph& g);

struct NestingReport {
  bool non_nesting = true;
  std::optional<std::pair<VertexId, VertexId>> witness;  ///< S(first) inside S(second)
};

NestingReport is_non_nesting(const LayeredGraph& g);

/// Reachability order (x <= y when a downward path leads from y to x):
/// pairwise joins and meets exist and each element is a join of atoms.
bool is_atomic_lattice(const LayeredGraph& g);

}  // namespace laga
