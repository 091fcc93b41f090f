#include "laga/free_algebra.hpp"

namespace laga {

std::size_t weight(const Word& w) {
  std::size_t total = 0;
  for (const auto& v : w) total += v.level;
  return total;
}

std::string to_string(const Word& w, const LayeredGraph* g) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += g ? g->label(w[i]) : to_string(w[i]);
  }
  return out;
}

FreeElement FreeElement::constant(Field field, const Scalar& c) { return monomial(field, {}, c); }

FreeElement FreeElement::monomial(Field field, const Word& w, const Scalar& c) {
  FreeElement e(field);
  e.add_term(w, c);
  return e;
}

Scalar FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
  Scalar value = field_.reduce(c);
  if (value == 0) return;
  auto [it, fresh] = terms_.emplace(w, value);
  if (fresh) return;
  it->second = field_.add(it->second, value);
  if (it->second == 0) terms_.erase(it);
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, field_.neg(c));
  return *this;
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
  FreeElement out(field_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add_term(w, field_.mul(ca, cb));
    }
  return out;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  FreeElement out(field_);
  for (const auto& [w, x] : terms_) out.add_term(w, field_.mul(x, field_.reduce(c)));
  return out;
}

std::string FreeElement::to_string(const LayeredGraph* g) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coeff = laga::to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (w.empty())
      out += coeff;
    else
      out += (coeff == "1" ? "" : coeff + " ") + laga::to_string(w, g);
    first = false;
  }
  return out;
}

}  // namespace laga
