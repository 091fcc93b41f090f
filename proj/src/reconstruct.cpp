#include "laga/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <thread>

#include "laga/builders.hpp"
#include "laga/error.hpp"
#include "laga/graph_io.hpp"

namespace laga {

namespace {

using Residues = std::vector<std::uint32_t>;

std::uint32_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Rank of a rows x cols matrix over F_p; destroys the buffer.
std::size_t rank_mod_p(std::vector<std::uint32_t>& m, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(m[pivot * cols + k], m[rank * cols + k]);
    std::uint64_t inv = inverse_mod(m[rank * cols + c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t f = m[r * cols + c];
      if (f == 0) continue;
      f = f * inv % p;
      for (std::size_t k = c; k < cols; ++k)
        m[r * cols + k] = static_cast<std::uint32_t>((m[r * cols + k] + (p - f) * m[rank * cols + k]) % p);
    }
    ++rank;
  }
  return rank;
}

// Incremental echelon basis over F_p.
class EchelonModP {
 public:
  EchelonModP(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}
  std::size_t rank() const { return rows_.size(); }
  /// Adds v if it is independent of what is there; returns whether it did.
  bool insert(Residues v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        v[k] = static_cast<std::uint32_t>((v[k] + (p_ - f) * rows_[r][k]) % p_);
    }
    std::size_t lead = 0;
    while (lead < dim_ && v[lead] == 0) ++lead;
    if (lead == dim_) return false;
    std::uint64_t inv = inverse_mod(v[lead], p_);
    for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint64_t f = rows_[r][lead];
      if (f == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        rows_[r][k] = static_cast<std::uint32_t>((rows_[r][k] + (p_ - f) * v[k]) % p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<Residues> rows_;
  std::vector<std::size_t> pivots_;
};

void require_level(const AlgebraView& view, std::size_t n) {
  if (n == 0 || n > view.top_level())
    throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(n) + " has no level below it in the view");
}

// Residues of the products, laid out [i][l][t].
std::vector<std::uint32_t> table_residues(const ProductTable& table) {
  std::vector<std::uint32_t> out;
  out.reserve(table.rows() * table.cols() * table.target_dim());
  for (std::size_t i = 0; i < table.rows(); ++i)
    for (std::size_t l = 0; l < table.cols(); ++l)
      for (const auto& x : table.product(i, l)) out.push_back(static_cast<std::uint32_t>(x.get_num().get_ui()));
  return out;
}

// {a : a * K = 0}.
Subspace annihilator_of(const ProductTable& table, const Subspace& K) {
  const Field& field = table.field();
  const std::size_t D = table.target_dim();
  Matrix m(field, table.rows(), K.dim() * D);
  for (std::size_t u = 0; u < K.dim(); ++u) {
    Vector ku = K.basis().row(u);
    for (std::size_t i = 0; i < table.rows(); ++i) {
      Vector e = field.zero_vector(table.rows());
      e[i] = 1;
      Vector prod = table.multiply(e, ku);
      for (std::size_t t = 0; t < D; ++t) m.set(i, u * D + t, prod[t]);
    }
  }
  return left_kernel(m);
}

BasisMode default_mode(const AlgebraView& view) {
  return view.field.is_prime() ? BasisMode::Exhaustive : BasisMode::Vertex;
}

nlohmann::json vector_json(const Vector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json basis_json(const UpperBasis& basis) {
  nlohmann::json j;
  j["level"] = basis.level;
  auto vectors = nlohmann::json::array();
  for (const auto& v : basis.vectors) vectors.push_back(vector_json(v));
  j["basis"] = std::move(vectors);
  j["k"] = basis.ks;
  return j;
}

struct UpperLevels {
  std::vector<UpperBasis> bases;  // by view level
  std::vector<Edge> edges;        // between view levels >= 2, unshifted
};

UpperLevels recover_upper(const AlgebraView& view, const ScanOptions& options) {
  UpperLevels out;
  out.bases.resize(view.level_dims.size());
  const std::size_t top = view.top_level();
  for (std::size_t i = 2; i <= top; ++i) {
    out.bases[i] = upper_vertex_like_basis(view, i, default_mode(view), options);
    const auto& basis = out.bases[i];
    for (std::size_t s = 0; s < basis.vectors.size(); ++s) {
      if (basis.ks[s] >= view.level_dims[i - 1])
        throw Error(ErrorKind::NonNestingViolated, "level " + std::to_string(i) + " basis element " +
                                                       std::to_string(s) + " has out-degree one");
      if (annihilator_of(view.product(i), basis.kappas[s]).dim() != 1)
        throw Error(ErrorKind::NonNestingViolated, "level " + std::to_string(i) + " basis element " +
                                                       std::to_string(s) + " shares its kappa annihilator");
    }
  }
  for (std::size_t i = 3; i <= top; ++i)
    for (std::size_t s = 0; s < out.bases[i].vectors.size(); ++s)
      for (std::size_t t = 0; t < out.bases[i - 1].vectors.size(); ++t)
        if (!out.bases[i].kappas[s].contains(out.bases[i - 1].vectors[t])) out.edges.push_back({{i, s}, {i - 1, t}});
  return out;
}

nlohmann::json base_report(const AlgebraView& view, const std::string& family) {
  nlohmann::json j;
  j["family"] = family;
  j["field"] = view.field.name();
  j["level_dims"] = view.level_dims;
  j["levels"] = nlohmann::json::array();
  return j;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t e = 0; e < n - i; ++e) a *= q;
    for (std::uint64_t e = 0; e < i + 1; ++e) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Shared tail of the Boolean and subspace routes: recover level 1 from sets of
// level-2 elements of the given size whose joint kappa is not just the line of
// the all-ones vector, then certify against the expected lattice.
Reconstruction recover_whole(const AlgebraView& view, std::size_t subset_size, const LayeredGraph& expected,
                             nlohmann::json report, const ScanOptions& options) {
  const std::size_t top = view.top_level();
  if (view.level_dims != expected.levels())
    throw Error(ErrorKind::ReconstructionFailed, "level dimensions do not match the family");
  Reconstruction result{expected, {}, std::move(report), false, std::nullopt};
  std::vector<Edge> edges;
  std::vector<UpperBasis> bases(top + 1);

  if (top >= 1)
    for (std::size_t w = 0; w < view.level_dims[1]; ++w) edges.push_back({{1, w}, {0, 0}});
  if (top <= 2) {
    // at most one vertex above level 1: its out-degree has to be all of level 1
    if (top == 2) {
      bases[2] = upper_vertex_like_basis(view, 2, default_mode(view), options);
      for (std::size_t s = 0; s < bases[2].vectors.size(); ++s) {
        if (view.level_dims[1] - bases[2].ks[s] + 1 != view.level_dims[1])
          throw Error(ErrorKind::ReconstructionFailed, "top vertex does not cover every vertex of level 1");
        for (std::size_t w = 0; w < view.level_dims[1]; ++w) edges.push_back({{2, s}, {1, w}});
      }
    }
  } else {
    UpperLevels upper;
    try {
      upper = recover_upper(view, options);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonNestingViolated) throw;
      throw Error(ErrorKind::ReconstructionFailed, std::string("upper levels are not recoverable (") + e.what() + ")");
    }
    bases = upper.bases;
    edges.insert(edges.end(), upper.edges.begin(), upper.edges.end());

    const auto& level2 = bases[2];
    const std::size_t count = level2.vectors.size();
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, const Subspace&)> search = [&](std::size_t next, const Subspace& meet) {
      if (current.size() == subset_size) {
        found.push_back(current);
        return;
      }
      for (std::size_t s = next; s + (subset_size - current.size()) <= count; ++s) {
        Subspace narrowed = meet.intersect(level2.kappas[s]);
        if (narrowed.dim() <= 1) continue;
        current.push_back(s);
        search(s + 1, narrowed);
        current.pop_back();
      }
    };
    search(0, Subspace::full(view.field, view.level_dims[1]));
    result.report["level_one_sets"] = found;
    if (found.size() != view.level_dims[1])
      throw Error(ErrorKind::ReconstructionFailed,
                  "found " + std::to_string(found.size()) + " level-2 sets of size " + std::to_string(subset_size) +
                      " with kappa of dimension > 1, expected " + std::to_string(view.level_dims[1]));
    for (std::size_t w = 0; w < found.size(); ++w)
      for (std::size_t s = 0; s < count; ++s)
        if (!std::binary_search(found[w].begin(), found[w].end(), s)) edges.push_back({{2, s}, {1, w}});
  }

  for (const auto& b : bases)
    if (b.level != 0) result.report["levels"].push_back(basis_json(b));
  try {
    result.graph = LayeredGraph::build(view.level_dims, edges, {true, true});
  } catch (const Error& e) {
    throw Error(ErrorKind::ReconstructionFailed, std::string("recovered edges do not form a valid graph (") +
                                                     e.what() + ")");
  }
  result.bases = std::move(bases);
  result.report["graph"] = graph_to_json(result.graph);
  result.certificate = are_isomorphic(result.graph, expected);
  result.certified = result.certificate.has_value();
  result.report["certified"] = result.certified;
  if (!result.certified)
    throw Error(ErrorKind::ReconstructionFailed, "recovered graph is not isomorphic to the expected lattice");
  return result;
}

}  // namespace

std::vector<std::uint16_t> ray_k_values(const AlgebraView& view, std::size_t n, const ScanOptions& options) {
  require_level(view, n);
  const ProductTable& table = view.product(n);
  RayEnumerator rays(view.field, table.rows(), options.budget);
  const std::uint32_t p = rays.prime();
  const std::size_t d = table.rows(), c = table.cols(), D = table.target_dim();
  if (c > 65535) throw Error(ErrorKind::InvalidArgument, "level too large for the ray scan");
  const std::vector<std::uint32_t> T = table_residues(table);
  std::vector<std::uint16_t> ks(rays.count(), 0);

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    std::vector<std::uint32_t> L(c * D, 0), scratch;
    auto add_row = [&](std::size_t i, std::uint64_t coef) {
      if (coef == 0) return;
      const std::uint32_t* Ti = T.data() + i * c * D;
      for (std::size_t x = 0; x < c * D; ++x) L[x] = static_cast<std::uint32_t>((L[x] + coef * Ti[x]) % p);
    };
    Residues a = rays.at(begin);
    for (std::size_t i = 0; i < d; ++i) add_row(i, a[i]);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      scratch = L;
      ks[idx] = static_cast<std::uint16_t>(c - rank_mod_p(scratch, c, D, p));
      if (idx + 1 == end) break;
      Residues prev = a;
      rays.next(a);
      for (std::size_t i = 0; i < d; ++i)
        if (a[i] != prev[i]) add_row(i, (a[i] + p - prev[i]) % p);
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || rays.count() < threads) {
    worker(0, rays.count());
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (rays.count() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker, std::min<std::uint64_t>(t * chunk, rays.count()),
                        std::min<std::uint64_t>((t + 1) * chunk, rays.count()));
    for (auto& th : pool) th.join();
  }
  return ks;
}

UpperBasis upper_vertex_like_basis(const AlgebraView& view, std::size_t n, BasisMode mode, const ScanOptions& options) {
  require_level(view, n);
  const ProductTable& table = view.product(n);
  const std::size_t d = table.rows();
  UpperBasis out;
  out.level = n;

  if (mode == BasisMode::Vertex) {
    if (view.scrambled) throw Error(ErrorKind::InvalidArgument, "vertex mode needs an unscrambled view");
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (k, index)
    std::vector<Subspace> kappas;
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = view.field.zero_vector(d);
      e[i] = 1;
      kappas.push_back(table.kernel_of(e));
      order.emplace_back(kappas.back().dim(), i);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [k, i] : order) {
      Vector e = view.field.zero_vector(d);
      e[i] = 1;
      out.vectors.push_back(std::move(e));
      out.kappas.push_back(kappas[i]);
      out.ks.push_back(k);
    }
    return out;
  }

  const std::vector<std::uint16_t> ks = ray_k_values(view, n, options);
  RayEnumerator rays(view.field, d, options.budget);
  const std::uint32_t p = rays.prime();
  const std::size_t c = table.cols();
  EchelonModP chosen(d, p);
  std::vector<std::uint64_t> picked;
  for (std::size_t k = c + 1; k-- > 0 && picked.size() < d;)
    for (std::uint64_t idx = 0; idx < ks.size() && picked.size() < d; ++idx)
      if (ks[idx] == k && chosen.insert(rays.at(idx))) picked.push_back(idx);

  for (auto idx : picked) {
    Vector v = from_residues(rays.at(idx));
    Subspace kappa = table.kernel_of(v);
    if (kappa.dim() != ks[idx]) throw std::logic_error("ray scan disagrees with exact kernel");
    out.vectors.push_back(std::move(v));
    out.kappas.push_back(std::move(kappa));
    out.ks.push_back(ks[idx]);
  }

  // each kappa must occur as often as the algebra says vertices carry it
  std::map<Subspace, std::size_t> multiplicity;
  for (const auto& kappa : out.kappas) ++multiplicity[kappa];
  for (const auto& [kappa, seen] : multiplicity) {
    Subspace ann = annihilator_of(table, kappa);
    RayEnumerator inner(view.field, ann.dim(), options.budget);
    EchelonModP larger(d, p);
    Residues x = inner.count() ? inner.at(0) : Residues{};
    for (std::uint64_t j = 0; j < inner.count(); ++j, inner.next(x)) {
      Residues v(d, 0);
      for (std::size_t r = 0; r < ann.dim(); ++r) {
        if (x[r] == 0) continue;
        for (std::size_t col = 0; col < d; ++col)
          v[col] = static_cast<std::uint32_t>(
              (v[col] + static_cast<std::uint64_t>(x[r]) * ann.basis().at(r, col).get_num().get_ui()) % p);
      }
      if (ks[rays.index_of(v)] > kappa.dim()) larger.insert(std::move(v));
    }
    std::size_t expected = ann.dim() - larger.rank();
    if (expected != seen)
      throw Error(ErrorKind::VerificationFailed, "a kappa of dimension " + std::to_string(kappa.dim()) + " occurs " +
                                                     std::to_string(seen) + " times in the basis but " +
                                                     std::to_string(expected) + " times among vertices");
  }
  return out;
}

std::vector<std::size_t> outdegree_multiset(const AlgebraView& view, std::size_t n, const ScanOptions& options) {
  require_level(view, n);
  std::vector<std::size_t> out;
  if (n == 1) {
    out.assign(view.level_dims[1], 1);
    return out;
  }
  auto basis = upper_vertex_like_basis(view, n, default_mode(view), options);
  for (auto k : basis.ks) out.push_back(view.level_dims[n - 1] - k + 1);
  std::sort(out.begin(), out.end());
  return out;
}

IntersectionSize intersection_size(const AlgebraView& view, std::size_t n, const Vector& b1, const Vector& b2) {
  require_level(view, n);
  const ProductTable& table = view.product(n);
  if (b1.size() != table.rows() || b2.size() != table.rows())
    throw Error(ErrorKind::LevelMismatch, "elements do not live on level " + std::to_string(n));
  Subspace k1 = table.kernel_of(b1), k2 = table.kernel_of(b2);
  long value = static_cast<long>(view.level_dims[n - 1]) + static_cast<long>(k1.intersect(k2).dim()) -
               static_cast<long>(k1.dim()) - static_cast<long>(k2.dim()) + 1;
  return {value, value >= 2};
}

Reconstruction reconstruct_nonnesting(const AlgebraView& view, const std::optional<LayeredGraph>& reference,
                                      const ScanOptions& options) {
  const std::size_t top = view.top_level();
  if (top < 2) throw Error(ErrorKind::InvalidArgument, "the view needs at least three levels");
  UpperLevels upper = recover_upper(view, options);
  std::vector<std::size_t> levels(view.level_dims.begin() + 2, view.level_dims.end());
  std::vector<Edge> edges;
  for (const auto& [tail, head] : upper.edges) edges.push_back({{tail.level - 2, tail.index}, {head.level - 2, head.index}});
  Reconstruction result{LayeredGraph::build(levels, edges, {levels[0] == 1, true}), std::move(upper.bases),
                        base_report(view, "nonnesting"), false, std::nullopt};
  for (const auto& b : result.bases)
    if (b.level != 0) result.report["levels"].push_back(basis_json(b));
  result.report["graph"] = graph_to_json(result.graph);
  if (reference) {
    result.certificate = are_isomorphic(result.graph, upper_part(*reference, 2));
    result.certified = result.certificate.has_value();
    result.report["certified"] = result.certified;
  }
  return result;
}

Reconstruction reconstruct_boolean(const AlgebraView& view, std::size_t n, const ScanOptions& options) {
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= n; ++i) dims.push_back(binomial(n, i));
  if (view.level_dims != dims) throw Error(ErrorKind::ReconstructionFailed, "level dimensions are not binomial");
  std::size_t subset = n >= 1 ? binomial(n - 1, 2) : 0;
  return recover_whole(view, subset, build_boolean(n), base_report(view, "boolean"), options);
}

Reconstruction reconstruct_subspace(const AlgebraView& view, std::uint32_t q, std::size_t n,
                                    const ScanOptions& options) {
  if (!is_prime_number(q)) throw Error(ErrorKind::UnsupportedField, "subspace lattices are built for prime q only");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i <= n; ++i) dims.push_back(gaussian_binomial(q, n, i));
  if (view.level_dims != dims)
    throw Error(ErrorKind::ReconstructionFailed, "level dimensions are not Gaussian binomials");
  // planes missing a fixed line
  std::size_t subset = n >= 2 ? gaussian_binomial(q, n, 2) - gaussian_binomial(q, n - 1, 1) : 0;
  auto report = base_report(view, "subspace");
  report["q"] = q;
  return recover_whole(view, subset, build_subspace_lattice(q, n), std::move(report), options);
}

}  // namespace laga
