#include "laga/rays.hpp"

#include <cstdlib>
#include <string>

#include "laga/error.hpp"

namespace laga {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LAGA_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

RayEnumerator::RayEnumerator(Field field, std::size_t dim, std::uint64_t budget) : p_(0), dim_(dim), count_(0) {
  if (!field.is_prime()) throw Error(ErrorKind::UnsupportedField, "ray enumeration needs a prime field");
  p_ = field.characteristic();
  powers_.push_back(1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (powers_.back() > budget / p_)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(p_) + "^" + std::to_string(dim) +
                                                 " exceeds the enumeration budget " + std::to_string(budget));
    powers_.push_back(powers_.back() * p_);
  }
  count_ = (powers_[dim] - 1) / (p_ - 1);
}

// Rays are grouped by leading position, the block with the latest leading
// position first; inside a block the tail is read as a base-p number.
std::vector<std::uint32_t> RayEnumerator::at(std::uint64_t index) const {
  std::vector<std::uint32_t> v(dim_, 0);
  std::uint64_t offset = 0;
  for (std::size_t lead = dim_; lead-- > 0;) {
    std::uint64_t block = powers_[dim_ - 1 - lead];
    if (index < offset + block) {
      v[lead] = 1;
      std::uint64_t tail = index - offset;
      for (std::size_t i = dim_; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(tail % p_);
        tail /= p_;
      }
      return v;
    }
    offset += block;
  }
  throw Error(ErrorKind::InvalidArgument, "ray index out of range");
}

std::uint64_t RayEnumerator::index_of(const std::vector<std::uint32_t>& v) const {
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) throw Error(ErrorKind::InvalidArgument, "the zero vector is not a ray");
  // scale so the leading entry is 1
  std::uint64_t inv = 1, base = v[lead], e = p_ - 2;
  while (e) {
    if (e & 1) inv = inv * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  std::uint64_t offset = (powers_[dim_ - 1 - lead] - 1) / (p_ - 1);
  std::uint64_t tail = 0;
  for (std::size_t i = lead + 1; i < dim_; ++i) tail = tail * p_ + (v[i] * inv % p_);
  return offset + tail;
}

bool RayEnumerator::next(std::vector<std::uint32_t>& v) const {
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) return false;
  for (std::size_t i = dim_; i-- > lead + 1;) {
    if (v[i] + 1 < p_) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  v[lead] = 0;
  if (lead == 0) return false;
  v[lead - 1] = 1;
  return true;
}

std::vector<Vector> enumerate_vectors(const Field& field, std::size_t dim, std::uint64_t budget) {
  RayEnumerator rays(field, dim, budget);
  std::vector<Vector> out;
  out.reserve(rays.count());
  if (rays.count() == 0) return out;
  auto v = rays.at(0);
  do out.push_back(from_residues(v));
  while (rays.next(v));
  return out;
}

std::vector<std::uint32_t> to_residues(const Vector& v) {
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint32_t>(v[i].get_num().get_ui());
  return out;
}

Vector from_residues(const std::vector<std::uint32_t>& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace laga
