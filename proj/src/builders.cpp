#include "laga/builders.hpp"

#include <algorithm>
#include <functional>

#include "laga/error.hpp"
#include "laga/field.hpp"

namespace laga {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = next; x <= n; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string set_label(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

LayeredGraph build_boolean(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "boolean lattice needs n >= 1");
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  std::vector<std::size_t> levels;
  std::map<VertexId, std::string> labels;
  for (std::size_t k = 0; k <= n; ++k) {
    subsets.push_back(combinations(n, k));
    levels.push_back(subsets.back().size());
    for (std::size_t i = 0; i < subsets[k].size(); ++i) labels[{k, i}] = set_label(subsets[k][i]);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < subsets[k].size(); ++i)
      for (std::size_t drop = 0; drop < k; ++drop) {
        auto smaller = subsets[k][i];
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = std::lower_bound(subsets[k - 1].begin(), subsets[k - 1].end(), smaller);
        edges.push_back({{k, i}, {k - 1, static_cast<std::size_t>(it - subsets[k - 1].begin())}});
      }
  return LayeredGraph::build(std::move(levels), edges, {true, true}, std::move(labels));
}

std::vector<std::vector<std::vector<std::uint32_t>>> echelon_subspaces(std::uint32_t q, std::size_t n, std::size_t k) {
  Field::prime(q);
  using Echelon = std::vector<std::vector<std::uint32_t>>;
  std::vector<Echelon> out;
  for (const auto& pivots1 : combinations(n, k)) {
    std::vector<std::size_t> pivots;
    for (auto p : pivots1) pivots.push_back(p - 1);
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free_slots.push_back({r, c});
    Echelon m(k, std::vector<std::uint32_t>(n, 0));
    for (std::size_t r = 0; r < k; ++r) m[r][pivots[r]] = 1;
    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < free_slots.size(); ++s) m[free_slots[s].first][free_slots[s].second] = digits[s];
      out.push_back(m);
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool row_in_span(const std::vector<std::vector<std::uint32_t>>& echelon, std::vector<std::uint32_t> v, std::uint32_t q) {
  for (const auto& row : echelon) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    std::uint64_t factor = v[p];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = static_cast<std::uint32_t>((v[c] + (q - factor) * row[c]) % q);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::string echelon_label(const std::vector<std::vector<std::uint32_t>>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? "," : "") + std::to_string(m[r][c]);
  }
  return out + "]";
}

}  // namespace

LayeredGraph build_subspace_lattice(std::uint32_t q, std::size_t n) {
  if (!is_prime_number(q))
    throw Error(ErrorKind::UnsupportedField, "subspace lattices are built over prime fields only, got q=" +
                                                 std::to_string(q));
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "subspace lattice needs n >= 1");
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> subspaces;
  std::vector<std::size_t> levels;
  std::map<VertexId, std::string> labels;
  for (std::size_t k = 0; k <= n; ++k) {
    subspaces.push_back(echelon_subspaces(q, n, k));
    levels.push_back(subspaces.back().size());
    for (std::size_t i = 0; i < subspaces[k].size(); ++i) labels[{k, i}] = echelon_label(subspaces[k][i]);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < subspaces[k].size(); ++i)
      for (std::size_t j = 0; j < subspaces[k - 1].size(); ++j) {
        const auto& lower = subspaces[k - 1][j];
        bool inside = std::all_of(lower.begin(), lower.end(),
                                  [&](const auto& row) { return row_in_span(subspaces[k][i], row, q); });
        if (inside) edges.push_back({{k, i}, {k - 1, j}});
      }
  return LayeredGraph::build(std::move(levels), edges, {true, true}, std::move(labels));
}

LayeredGraph build_complete_layered(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw Error(ErrorKind::InvalidArgument, "complete layered graph needs at least one level");
  std::vector<Edge> edges;
  for (std::size_t l = 1; l < sizes.size(); ++l)
    for (std::size_t i = 0; i < sizes[l]; ++i)
      for (std::size_t j = 0; j < sizes[l - 1]; ++j) edges.push_back({{l, i}, {l - 1, j}});
  GraphFlags flags{sizes[0] == 1, true};
  for (std::size_t l = 1; l < sizes.size(); ++l)
    if (sizes[l] > 0 && sizes[l - 1] == 0) flags.positive_outdegree = false;
  return LayeredGraph::build(sizes, edges, flags);
}

}  // namespace laga
