#include "laga/matrix.hpp"

#include <algorithm>

#include "laga/error.hpp"
#include "laga/subspace.hpp"

namespace laga {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.raw(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vector& row) {
  if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
  for (const auto& x : row) data_.push_back(field_.reduce(x));
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.raw(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (rhs.at(k, c) == 0) continue;
        field_.add_mul(out.raw(r, c), a, rhs.at(k, c));
      }
    }
  return out;
}

Vector Matrix::left_apply(const Vector& x) const {
  if (x.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from row count");
  Vector out(cols_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) field_.add_mul(out[c], x[r], at(r, c));
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

nlohmann::json Matrix::to_json() const {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < rows_; ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < cols_; ++c) row.push_back(to_string(at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix Matrix::from_json(Field field, const nlohmann::json& j) {
  std::vector<Vector> rows;
  std::size_t cols = 0;
  for (const auto& row : j) {
    Vector v;
    for (const auto& x : row)
      v.push_back(x.is_string() ? parse_scalar(field, x.get<std::string>()) : field.from_int(x.get<long>()));
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return from_rows(field, cols, rows);
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.raw(sel, c), a.raw(row, c));
    Scalar inv = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.raw(row, c) = f.mul(a.at(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Scalar factor = f.neg(a.at(r, col));
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a.at(row, c) != 0) f.add_mul(a.raw(r, c), factor, a.at(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix reduced(f, row, a.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) reduced.raw(r, c) = a.at(r, c);
  return RrefResult{std::move(reduced), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::size_t sparse_rank(const Field& field, const std::vector<SparseVector>& rows) {
  std::map<std::size_t, SparseVector> pivots;
  for (const auto& input : rows) {
    SparseVector row;
    for (const auto& [c, x] : input) {
      Scalar r = field.reduce(x);
      if (r != 0) row.emplace(c, r);
    }
    while (!row.empty()) {
      auto [lead, coeff] = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Scalar inv = field.inv(coeff);
        for (auto& [c, x] : row) x = field.mul(x, inv);
        pivots.emplace(lead, std::move(row));
        break;
      }
      Scalar factor = field.neg(coeff);
      for (const auto& [c, x] : it->second) {
        auto [slot, fresh] = row.emplace(c, Scalar(0));
        field.add_mul(slot->second, factor, x);
        if (slot->second == 0) row.erase(slot);
      }
    }
  }
  return pivots.size();
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace left_kernel(const Matrix& m) { return kernel(m.transpose()); }

}  // namespace laga
