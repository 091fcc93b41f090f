#pragma once

#include <map>
#include <string>
#include <vector>

#include "laga/field.hpp"
#include "laga/graph.hpp"

namespace laga {

/// A monomial of the free algebra on the positive-level vertices.
using Word = std::vector<VertexId>;

/// Sum of vertex levels.
std::size_t weight(const Word& w);
std::string to_string(const Word& w, const LayeredGraph* g = nullptr);

/// Noncommutative polynomial with exact coefficients; zero terms are never stored.
class FreeElement {
 public:
  explicit FreeElement(Field field) : field_(field) {}
  static FreeElement constant(Field field, const Scalar& c);
  static FreeElement monomial(Field field, const Word& w, const Scalar& c = 1);

  const Field& field() const noexcept { return field_; }
  const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement operator+(const FreeElement& o) const { return FreeElement(*this) += o; }
  FreeElement operator-(const FreeElement& o) const { return FreeElement(*this) -= o; }
  FreeElement operator*(const FreeElement& o) const;
  FreeElement scaled(const Scalar& c) const;

  std::string to_string(const LayeredGraph* g = nullptr) const;

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::map<Word, Scalar> terms_;
};

}  // namespace laga
