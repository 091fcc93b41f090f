#pragma once

#include <compare>
#include <string>

#include "laga/matrix.hpp"

namespace laga {

/// A linear subspace of F^n in canonical form: its basis is the reduced row
/// echelon matrix with no zero rows. Equal subspaces have identical bases.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace span(const Matrix& rows);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Reduces v modulo the subspace onto the non-pivot coordinates.
  Vector normal_form(const Vector& v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// Orthogonal complement under the standard pairing.
  Subspace annihilator() const;
  /// Image under x -> x * map.
  Subspace image(const Matrix& map) const;

  std::string key() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(RrefResult r) : basis_(std::move(r.reduced)), pivots_(std::move(r.pivots)) {}
  friend Subspace kernel(const Matrix&);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace laga
