#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "laga/free_algebra.hpp"
#include "laga/graph.hpp"
#include "laga/matrix.hpp"
#include "laga/rays.hpp"
#include "laga/subspace.hpp"

namespace laga {

/// Products of level-n elements with level-(n-1) elements, written in a
/// basis of the degree-two component they land in.
class ProductTable {
 public:
  ProductTable(Field field, std::size_t rows, std::size_t cols, std::size_t target_dim);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t target_dim() const noexcept { return target_dim_; }

  const Vector& product(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Vector& product(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector multiply(const Vector& a, const Vector& x) const;
  /// Row j holds a * e_j.
  Matrix left_map(const Vector& a) const;
  /// Kernel of x -> a * x.
  Subspace kernel_of(const Vector& a) const;

  nlohmann::json to_json() const;
  static ProductTable from_json(Field field, const nlohmann::json& j);

  friend bool operator==(const ProductTable&, const ProductTable&) = default;

 private:
  Field field_;
  std::size_t rows_, cols_, target_dim_;
  std::vector<Vector> entries_;
};

/// Degree-two relations of B inside V_n (x) V_{n-1}, coordinate i*|V_{n-1}| + j:
/// v(x)w for non-edges and v (x) (sum of S(v)). For n = 1 every product vanishes.
Subspace relation_space(const LayeredGraph& g, std::size_t n, const Field& field = Field::rationals());
/// span{v (x) (u - w) : u, w in S(v)} for v on level n.
Subspace gr_quadratic_space(const LayeredGraph& g, std::size_t n, const Field& field = Field::rationals());

ProductTable product_table(const LayeredGraph& g, std::size_t n, const Field& field = Field::rationals());

struct BigradedComponent {
  std::size_t length = 0;
  std::size_t weight = 0;
  /// Words that are vertex paths; every other word is already zero.
  std::vector<Word> basis_words;
  /// Span of the remaining relations in basis_words coordinates, when requested.
  std::optional<Subspace> relations;
  std::size_t dim = 0;
};

BigradedComponent component(const LayeredGraph& g, std::size_t length, std::size_t weight,
                            const Field& field = Field::rationals(), bool with_relations = false,
                            std::uint64_t budget = default_budget());

/// Span of the class sums of the partition induced by A (level n) on level n - 1.
Subspace kappa_combinatorial(const LayeredGraph& g, std::size_t n, const std::vector<VertexId>& A,
                             const Field& field = Field::rationals());
/// Same, for an element given by coordinates on level n (its support decides).
Subspace kappa_of_element(const LayeredGraph& g, std::size_t n, const Vector& a,
                          const Field& field = Field::rationals());
/// Kernel of left multiplication by a, from structure constants.
Subspace kappa_kernel(const LayeredGraph& g, std::size_t n, const Vector& a, const Field& field = Field::rationals());

struct KStats {
  std::size_t k = 0;
  std::size_t k_touching = 0;
  std::size_t successor_count = 0;
};

/// Also checks dim of the combinatorial kappa against k; throws std::logic_error on mismatch.
KStats k_stats(const LayeredGraph& g, std::size_t n, const std::vector<VertexId>& A);

struct DualReport {
  bool annihilator_matches = false;
  std::size_t relation_dim = 0;  ///< relation_space
  std::size_t gr_dim = 0;        ///< gr_quadratic_space
  std::size_t ambient = 0;       ///< |V_n| * |V_{n-1}|
  bool dims_complement() const { return relation_dim + gr_dim == ambient; }
};

/// Requires a uniform graph (NotUniform otherwise).
DualReport quadratic_dual_check(const LayeredGraph& g, std::size_t n, const Field& field = Field::rationals());

/// level_maps[n] sends level n of g1 to level n of g2 (row i = image of vertex
/// i); entry 0 is ignored. True when every kappa is carried to the kappa of
/// the image vertex.
bool iso_condition_check(const LayeredGraph& g1, const LayeredGraph& g2, const std::vector<Matrix>& level_maps);

/// Shared, lazily filled caches of structure constants and dimensions for one
/// graph and field. Safe for concurrent readers.
class BAlgebra {
 public:
  BAlgebra(LayeredGraph g, Field field);

  const LayeredGraph& graph() const noexcept { return graph_; }
  const Field& field() const noexcept { return field_; }
  const ProductTable& products(std::size_t n) const;
  std::size_t dim(std::size_t length, std::size_t weight) const;

 private:
  LayeredGraph graph_;
  Field field_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const ProductTable>> tables_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> dims_;
};

/// dims[m][n] for 1 <= m <= max_length, 0 <= n <= max_weight (row and column 0 unused).
std::vector<std::vector<std::size_t>> hilbert_table_B(const LayeredGraph& g, std::size_t max_length,
                                                      std::size_t max_weight, const Field& field = Field::rationals());
std::vector<std::vector<std::size_t>> hilbert_table_grA(const LayeredGraph& g, std::size_t max_length,
                                                        std::size_t max_weight);

}  // namespace laga
