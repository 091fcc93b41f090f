#pragma once

#include <cstdint>
#include <vector>

#include "laga/field.hpp"

namespace laga {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Enumeration budget: LAGA_BUDGET from the environment, else kDefaultBudget.
std::uint64_t default_budget();

/// Nonzero vectors of F_p^dim, one per scalar ray (first nonzero coordinate
/// is 1), in lexicographic order. Random access by index, so callers can
/// shard [begin, end) ranges freely.
class RayEnumerator {
 public:
  RayEnumerator(Field field, std::size_t dim, std::uint64_t budget = default_budget());

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t count() const noexcept { return count_; }

  std::vector<std::uint32_t> at(std::uint64_t index) const;
  /// Index of the ray through v; v must be nonzero with entries in [0, p).
  std::uint64_t index_of(const std::vector<std::uint32_t>& v) const;
  /// Odometer step to the next ray in order; false past the end.
  bool next(std::vector<std::uint32_t>& v) const;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::uint64_t count_;
  std::vector<std::uint64_t> powers_;  // p^0 .. p^dim
};

/// All rays as exact vectors; convenient for small spaces.
std::vector<Vector> enumerate_vectors(const Field& field, std::size_t dim, std::uint64_t budget = default_budget());

std::vector<std::uint32_t> to_residues(const Vector& v);
Vector from_residues(const std::vector<std::uint32_t>& v);

}  // namespace laga
