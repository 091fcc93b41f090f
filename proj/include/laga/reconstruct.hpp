#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "laga/algebra_view.hpp"
#include "laga/graph.hpp"
#include "laga/isomorphism.hpp"
#include "laga/rays.hpp"

namespace laga {

enum class BasisMode { Exhaustive, Vertex };

struct ScanOptions {
  unsigned threads = 1;
  std::uint64_t budget = default_budget();
};

/// Greedy basis of B_{1,n} by decreasing k; ties go to the earlier ray.
struct UpperBasis {
  std::size_t level = 0;
  std::vector<Vector> vectors;
  std::vector<Subspace> kappas;
  std::vector<std::size_t> ks;
};

/// Exhaustive mode scans every ray (prime fields only) and then checks that
/// each kappa occurs in the basis as often as the algebra says vertices
/// carry it (VerificationFailed otherwise). Vertex mode only looks at the
/// coordinate vectors and needs an unscrambled view.
UpperBasis upper_vertex_like_basis(const AlgebraView& view, std::size_t n, BasisMode mode = BasisMode::Exhaustive,
                                   const ScanOptions& options = {});

/// k of every ray of B_{1,n}, indexed like RayEnumerator.
std::vector<std::uint16_t> ray_k_values(const AlgebraView& view, std::size_t n, const ScanOptions& options = {});

/// Sorted out-degrees of level n. Level 1 reports 1 per vertex.
std::vector<std::size_t> outdegree_multiset(const AlgebraView& view, std::size_t n, const ScanOptions& options = {});

struct IntersectionSize {
  long value = 0;
  /// False when value <= 1, where 0 and 1 are not told apart.
  bool exact = false;
};

/// |V_{n-1}| + dim(kappa_1 cap kappa_2) - k_1 - k_2 + 1 for two basis elements of level n.
IntersectionSize intersection_size(const AlgebraView& view, std::size_t n, const Vector& b1, const Vector& b2);

struct Reconstruction {
  LayeredGraph graph;
  std::vector<UpperBasis> bases;  ///< by level; level 0 left empty
  nlohmann::json report;
  bool certified = false;
  std::optional<VertexMap> certificate;
};

/// Levels >= 2 of a non-nesting graph, shifted down by two. When a reference
/// graph is given the result is certified against its upper part.
Reconstruction reconstruct_nonnesting(const AlgebraView& view, const std::optional<LayeredGraph>& reference = {},
                                      const ScanOptions& options = {});

/// Whole lattice, certified against the standard Boolean lattice on n points.
Reconstruction reconstruct_boolean(const AlgebraView& view, std::size_t n, const ScanOptions& options = {});

/// Whole lattice, certified against the subspaces of F_q^n.
Reconstruction reconstruct_subspace(const AlgebraView& view, std::uint32_t q, std::size_t n,
                                    const ScanOptions& options = {});

}  // namespace laga
