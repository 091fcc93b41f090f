#include "laga/subspace.hpp"

#include "laga/error.hpp"

namespace laga {

Subspace Subspace::zero(Field field, std::size_t ambient) { return span(Matrix(field, 0, ambient)); }

Subspace Subspace::full(Field field, std::size_t ambient) { return span(Matrix::identity(field, ambient)); }

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return span(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::span(const Matrix& rows) { return Subspace(rref(rows)); }

bool Subspace::contains(const Vector& v) const {
  Vector nf = normal_form(v);
  for (const auto& x : nf)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "containment across ambients");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::normal_form(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
  const Field& f = field();
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.reduce(v[i]);
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t p = pivots_[r];
    if (out[p] == 0) continue;
    Scalar factor = f.neg(out[p]);
    for (std::size_t c = p; c < ambient_dim(); ++c)
      if (basis_.at(r, c) != 0) f.add_mul(out[c], factor, basis_.at(r, c));
  }
  return out;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim() || !(other.field() == field()))
    throw Error(ErrorKind::AmbientMismatch, "intersection across ambients");
  Matrix constraints = annihilator().basis_;
  const Matrix& more = other.annihilator().basis_;
  for (std::size_t r = 0; r < more.rows(); ++r) constraints.append_row(more.row(r));
  return kernel(constraints);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim() || !(other.field() == field()))
    throw Error(ErrorKind::AmbientMismatch, "sum across ambients");
  Matrix rows = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) rows.append_row(other.basis_.row(r));
  return span(rows);
}

Subspace Subspace::image(const Matrix& map) const {
  if (map.rows() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map domain differs from ambient");
  return span(basis_ * map);
}

std::string Subspace::key() const {
  std::string out = field().name() + ":" + std::to_string(ambient_dim()) + "[";
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (c) out += ',';
      out += to_string(basis_.at(r, c));
    }
  }
  return out + "]";
}

nlohmann::json Subspace::to_json() const {
  return {{"field", field().name()}, {"ambient_dim", ambient_dim()}, {"dim", dim()}, {"basis", basis_.to_json()}};
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t col = 0; col < a.ambient_dim(); ++col) {
      int c = cmp(a.basis_.at(r, col), b.basis_.at(r, col));
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  return std::strong_ordering::equal;
}

}  // namespace laga
