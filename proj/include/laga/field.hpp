#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace laga {

/// Exact scalar. Over a prime field the value is kept as the least residue.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "QQ", "F<p>" and "GF(<p>)".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long value) const;
  Scalar reduce(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  /// a += b * c, in place.
  void add_mul(Scalar& a, const Scalar& b, const Scalar& c) const;

  Vector zero_vector(std::size_t n) const { return Vector(n, Scalar(0)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// "3", "-1/2"; parse_scalar reads the same form.
std::string to_string(const Scalar& value);
Scalar parse_scalar(const Field& field, std::string_view text);

}  // namespace laga
