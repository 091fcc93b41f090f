#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "laga/free_algebra.hpp"
#include "laga/graph.hpp"
#include "laga/rays.hpp"

namespace laga {

using VertexPath = std::vector<VertexId>;

/// Downward reachability between any two vertices (a vertex reaches itself).
class Reachability {
 public:
  explicit Reachability(const LayeredGraph& g);
  bool reaches(VertexId from, VertexId to) const;

 private:
  std::vector<std::size_t> offset_;
  std::vector<std::vector<bool>> below_;
};

/// Follows the least successor from v until level 0.
VertexPath distinguished_path(const LayeredGraph& g, VertexId v);

/// First k vertices of the distinguished path of v.
Word monomial_m(const LayeredGraph& g, VertexId v, std::size_t k);

/// Coefficient of t^(|v|-k) in the product over the distinguished path of
/// (t - edge), where the edge (x, y) stands for x - y, or x when y has level 0.
FreeElement e_tilde(const LayeredGraph& g, VertexId v, std::size_t k, const Field& field = Field::rationals());

/// Run boundaries of a word (1-based, closing with length + 1). A new run
/// starts wherever a letter is not the least successor of the letter before.
std::vector<std::size_t> skeleton(const LayeredGraph& g, const Word& w);

struct RunPair {
  VertexId vertex;
  std::size_t length = 0;
  friend auto operator<=>(const RunPair&, const RunPair&) = default;
};
using PairSequence = std::vector<RunPair>;

PairSequence to_pair_sequence(const LayeredGraph& g, const Word& w);
Word monomial_of(const LayeredGraph& g, const PairSequence& b);

/// True when a path of exactly `first.length` steps leads from first.vertex
/// to second.vertex.
bool covers_pair(const Reachability& reach, const RunPair& first, const RunPair& second);
/// No consecutive pair covers the next.
bool is_basis_sequence(const LayeredGraph& g, const PairSequence& b);

struct NormalizeStep {
  Word before;
  Word after;
  std::size_t run_start = 0;  ///< 1-based position of the extended run
  VertexPath witness;         ///< least path joining the run head to the absorbed letter
};

/// Rewrites w into a word whose pair sequence is a basis sequence, extending
/// one run at a time by the letter it covers.
Word normalize(const LayeredGraph& g, const Word& w, std::vector<NormalizeStep>* trace = nullptr);

/// Basis sequences whose monomials have `length` letters and total weight `total_weight`.
std::vector<PairSequence> enumerate_B_basis(const LayeredGraph& g, std::size_t length, std::size_t total_weight);

/// All words over positive-level vertices with the given length and weight, sorted.
std::vector<Word> words_of_bidegree(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                    std::uint64_t budget = default_budget());

/// Binomial generators a - a' of the path-difference ideal in one bidegree:
/// a' replaces one path segment of a by another path of equal length from
/// the same start. Deduplicated, a < a'.
std::vector<FreeElement> rgr_relations(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                       const Field& field = Field::rationals());

/// Quotient dimension in one bidegree, computed by merging words linked by a
/// segment replacement. With quadratic_only, segments have two letters.
std::size_t rgr_quotient_dim(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                             bool quadratic_only = false, std::uint64_t budget = default_budget());

/// Same dimension via the rank of the relation matrix.
std::size_t rgr_quotient_dim_linear(const LayeredGraph& g, std::size_t length, std::size_t total_weight,
                                    const Field& field = Field::rationals());

struct QuadraticReport {
  bool quadratic = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing;  ///< (length, weight)
  std::size_t full_dim = 0;       ///< quotient dimension there
  std::size_t quadratic_dim = 0;  ///< dimension using two-letter segments only
};

/// Compares the ideal with its two-letter part for every bidegree up to
/// `max_length` letters.
QuadraticReport is_quadratic_to_degree(const LayeredGraph& g, std::size_t max_length,
                                       std::uint64_t budget = default_budget());

}  // namespace laga
