#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laga/b_algebra.hpp"
#include "laga/graph.hpp"
#include "laga/isomorphism.hpp"

namespace laga {

/// What reconstruction is allowed to see: level dimensions and the products
/// B_{1,n} x B_{1,n-1} -> B_{2,2n-1} in some bases, nothing about vertices.
struct AlgebraView {
  Field field = Field::rationals();
  std::vector<std::size_t> level_dims;  ///< index 0 is the minimal level
  std::vector<ProductTable> products;   ///< products[n-1] for level n >= 1
  bool scrambled = false;

  std::size_t top_level() const { return level_dims.size() - 1; }
  const ProductTable& product(std::size_t n) const;

  nlohmann::json to_json() const;
  static AlgebraView from_json(const nlohmann::json& j);
};

/// A certified change of basis: level_maps satisfy the kappa conditions from
/// the graph to itself, the relabeling is a graph isomorphism onto `relabeled`,
/// and the new basis of level n is relabel_n * level_map_n.
struct ScramblePlan {
  std::vector<Matrix> level_maps;
  VertexMap relabel;
  LayeredGraph relabeled;
  std::vector<Matrix> target_changes;  ///< invertible, per level n >= 1 (index n - 1)
  std::vector<std::string> moves;
  /// Rows are the new basis vectors of level n in vertex coordinates.
  std::vector<Matrix> bases;
};

ScramblePlan scramble_plan(const LayeredGraph& g, const Field& field, std::uint64_t seed);

/// Requires a uniform graph. Without a seed the vertex bases are used.
AlgebraView algebra_view(const LayeredGraph& g, const Field& field, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace laga
