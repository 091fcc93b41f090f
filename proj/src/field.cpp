#include "laga/field.hpp"

#include <charconv>

#include "laga/error.hpp"

namespace laga {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw Error(ErrorKind::UnsupportedField, "characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("GF(") && text.ends_with(")"))
    digits = text.substr(3, text.size() - 4);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::UnsupportedField, "cannot parse field '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Field::from_int(long value) const { return reduce(Scalar(value)); }

Scalar Field::reduce(const Scalar& value) const {
  if (is_rational()) {
    Scalar out(value);
    out.canonicalize();
    return out;
  }
  mpz_class p(p_);
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes in " + name());
  if (den != 1) {
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * den_inv) % p;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar out = a + b;
  if (is_prime() && out >= p_) out -= p_;
  return out;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar out = a - b;
  if (is_prime() && out < 0) out += p_;
  return out;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(a * b);
  mpz_class prod = a.get_num() * b.get_num();
  prod %= p_;
  return Scalar(prod);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (is_rational()) return Scalar(1) / a;
  mpz_class out;
  mpz_class p(p_);
  mpz_invert(out.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(out);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return Scalar(-a);
  return a == 0 ? Scalar(0) : Scalar(p_ - a);
}

void Field::add_mul(Scalar& a, const Scalar& b, const Scalar& c) const {
  if (is_rational()) {
    a += b * c;
    return;
  }
  mpz_class acc = a.get_num() + b.get_num() * c.get_num();
  acc %= p_;
  a = acc;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar parse_scalar(const Field& field, std::string_view text) {
  Scalar value;
  if (value.set_str(std::string(text), 10) != 0)
    throw Error(ErrorKind::InvalidArgument, "cannot parse scalar '" + std::string(text) + "'");
  return field.reduce(value);
}

}  // namespace laga
