#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "laga/field.hpp"

namespace laga {

/// Dense exact matrix, row-major. Entries are always reduced for the field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& value) { data_[r * cols_ + c] = field_.reduce(value); }
  /// Unchecked write; the caller guarantees the value is already reduced.
  Scalar& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void append_row(const Vector& row);
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  /// Row vector times matrix.
  Vector left_apply(const Vector& x) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  nlohmann::json to_json() const;
  static Matrix from_json(Field field, const nlohmann::json& j);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;  ///< nonzero rows only
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Column index to nonzero entry.
using SparseVector = std::map<std::size_t, Scalar>;
/// Rank of a sparse row set by leading-term elimination.
std::size_t sparse_rank(const Field& field, const std::vector<SparseVector>& rows);

class Subspace;
/// Right null space {x : m x = 0}.
Subspace kernel(const Matrix& m);
/// Left null space {x : x m = 0}.
Subspace left_kernel(const Matrix& m);

}  // namespace laga
