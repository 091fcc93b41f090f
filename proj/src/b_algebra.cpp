#include "laga/b_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "laga/combinatorics.hpp"
#include "laga/error.hpp"
#include "laga/gr_algebra.hpp"

namespace laga {

ProductTable::ProductTable(Field field, std::size_t rows, std::size_t cols, std::size_t target_dim)
    : field_(field),
      rows_(rows),
      cols_(cols),
      target_dim_(target_dim),
      entries_(rows * cols, Vector(target_dim, Scalar(0))) {}

Vector ProductTable::multiply(const Vector& a, const Vector& x) const {
  if (a.size() != rows_ || x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "product operand sizes");
  Vector out(target_dim_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] == 0) continue;
      Scalar c = field_.mul(a[i], x[j]);
      const auto& p = product(i, j);
      for (std::size_t t = 0; t < target_dim_; ++t)
        if (p[t] != 0) field_.add_mul(out[t], c, p[t]);
    }
  }
  return out;
}

Matrix ProductTable::left_map(const Vector& a) const {
  if (a.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "element size differs from level dimension");
  Matrix m(field_, cols_, target_dim_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (a[i] == 0) continue;
    Scalar ai = field_.reduce(a[i]);
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& p = product(i, j);
      for (std::size_t t = 0; t < target_dim_; ++t)
        if (p[t] != 0) field_.add_mul(m.raw(j, t), ai, p[t]);
    }
  }
  return m;
}

Subspace ProductTable::kernel_of(const Vector& a) const { return left_kernel(left_map(a)); }

nlohmann::json ProductTable::to_json() const {
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) {
      auto cell = nlohmann::json::array();
      for (const auto& x : product(i, j)) cell.push_back(to_string(x));
      row.push_back(std::move(cell));
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", rows_}, {"cols", cols_}, {"target_dim", target_dim_}, {"entries", std::move(entries)}};
}

ProductTable ProductTable::from_json(Field field, const nlohmann::json& j) {
  ProductTable t(field, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                 j.at("target_dim").get<std::size_t>());
  const auto& entries = j.at("entries");
  if (entries.size() != t.rows_) throw Error(ErrorKind::InvalidArgument, "product table row count");
  for (std::size_t i = 0; i < t.rows_; ++i) {
    if (entries[i].size() != t.cols_) throw Error(ErrorKind::InvalidArgument, "product table column count");
    for (std::size_t c = 0; c < t.cols_; ++c) {
      const auto& cell = entries[i][c];
      if (cell.size() != t.target_dim_) throw Error(ErrorKind::InvalidArgument, "product table target size");
      for (std::size_t s = 0; s < t.target_dim_; ++s)
        t.product(i, c)[s] = parse_scalar(field, cell[s].get<std::string>());
    }
  }
  return t;
}

namespace {

void require_level(const LayeredGraph& g, std::size_t n) {
  if (n == 0 || n > g.top_level())
    throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(n) + " has no level below it");
}

}  // namespace

Subspace relation_space(const LayeredGraph& g, std::size_t n, const Field& field) {
  require_level(g, n);
  const std::size_t rows = g.level_size(n), cols = g.level_size(n - 1), ambient = rows * cols;
  if (n == 1) return Subspace::full(field, ambient);
  std::vector<Vector> gens;
  for (std::size_t v = 0; v < rows; ++v) {
    const auto& succ = g.successors({n, v});
    Vector sum(ambient, Scalar(0));
    for (std::size_t w = 0; w < cols; ++w) {
      if (std::binary_search(succ.begin(), succ.end(), w)) {
        sum[v * cols + w] = 1;
      } else {
        Vector e(ambient, Scalar(0));
        e[v * cols + w] = 1;
        gens.push_back(std::move(e));
      }
    }
    if (!succ.empty()) gens.push_back(std::move(sum));
  }
  return Subspace::span(field, ambient, gens);
}

Subspace gr_quadratic_space(const LayeredGraph& g, std::size_t n, const Field& field) {
  require_level(g, n);
  const std::size_t rows = g.level_size(n), cols = g.level_size(n - 1), ambient = rows * cols;
  std::vector<Vector> gens;
  if (n >= 2)
    for (std::size_t v = 0; v < rows; ++v) {
      const auto& succ = g.successors({n, v});
      for (std::size_t k = 1; k < succ.size(); ++k) {
        Vector d(ambient, Scalar(0));
        d[v * cols + succ[k]] = 1;
        d[v * cols + succ[0]] = field.from_int(-1);
        gens.push_back(std::move(d));
      }
    }
  return Subspace::span(field, ambient, gens);
}

ProductTable product_table(const LayeredGraph& g, std::size_t n, const Field& field) {
  Subspace rel = relation_space(g, n, field);
  const std::size_t rows = g.level_size(n), cols = g.level_size(n - 1), ambient = rows * cols;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, p = 0; c < ambient; ++c) {
    if (p < rel.pivots().size() && rel.pivots()[p] == c)
      ++p;
    else
      free_cols.push_back(c);
  }
  ProductTable table(field, rows, cols, free_cols.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Vector e(ambient, Scalar(0));
      e[i * cols + j] = 1;
      Vector nf = rel.normal_form(e);
      for (std::size_t t = 0; t < free_cols.size(); ++t) table.product(i, j)[t] = nf[free_cols[t]];
    }
  return table;
}

BigradedComponent component(const LayeredGraph& g, std::size_t length, std::size_t weight, const Field& field,
                            bool with_relations, std::uint64_t budget) {
  BigradedComponent out;
  out.length = length;
  out.weight = weight;
  if (length == 0) {
    if (weight == 0) out.basis_words.push_back({});
    out.dim = out.basis_words.size();
    if (with_relations) out.relations = Subspace::zero(field, out.basis_words.size());
    return out;
  }
  // a path word with `length` letters starting on level l has weight length*l - length*(length-1)/2
  std::size_t offset = length * (length - 1) / 2;
  if ((weight + offset) % length == 0) {
    std::size_t start = (weight + offset) / length;
    if (start >= length && start <= g.top_level()) {
      Word current;
      std::function<void()> rec = [&] {
        if (current.size() == length) {
          if (out.basis_words.size() >= budget)
            throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " path words");
          out.basis_words.push_back(current);
          return;
        }
        VertexId cur = current.back();
        for (auto s : g.successors(cur)) {
          current.push_back({cur.level - 1, s});
          rec();
          current.pop_back();
        }
      };
      for (std::size_t i = 0; i < g.level_size(start); ++i) {
        current = {{start, i}};
        rec();
      }
    }
  }
  std::sort(out.basis_words.begin(), out.basis_words.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < out.basis_words.size(); ++i) index.emplace(out.basis_words[i], i);

  // x * v * (sum of S(v)) * y, keeping only the terms that are still paths
  std::set<std::pair<std::size_t, Word>> seen;
  std::vector<SparseVector> rows;
  for (const auto& w : out.basis_words)
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word blank = w;
      blank[i + 1] = {SIZE_MAX, SIZE_MAX};
      if (!seen.insert({i, blank}).second) continue;
      SparseVector row;
      for (auto u : g.successors(w[i])) {
        Word term = w;
        term[i + 1] = {w[i].level - 1, u};
        auto it = index.find(term);
        if (it != index.end()) row[it->second] = 1;
      }
      rows.push_back(std::move(row));
    }
  out.dim = out.basis_words.size() - sparse_rank(field, rows);
  if (with_relations) {
    Matrix m(field, rows.size(), out.basis_words.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, x] : rows[r]) m.set(r, c, x);
    out.relations = Subspace::span(m);
  }
  return out;
}

Subspace kappa_combinatorial(const LayeredGraph& g, std::size_t n, const std::vector<VertexId>& A,
                             const Field& field) {
  auto part = class_partition(g, n, A);
  const std::size_t ambient = g.level_size(n - 1);
  std::vector<Vector> sums;
  for (const auto& cls : part.classes) {
    Vector v(ambient, Scalar(0));
    for (auto x : cls) v[x] = 1;
    sums.push_back(std::move(v));
  }
  return Subspace::span(field, ambient, sums);
}

Subspace kappa_of_element(const LayeredGraph& g, std::size_t n, const Vector& a, const Field& field) {
  require_level(g, n);
  if (a.size() != g.level_size(n)) throw Error(ErrorKind::DimensionMismatch, "element size differs from level size");
  std::vector<VertexId> support;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (field.reduce(a[i]) != 0) support.push_back({n, i});
  return kappa_combinatorial(g, n, support, field);
}

Subspace kappa_kernel(const LayeredGraph& g, std::size_t n, const Vector& a, const Field& field) {
  return product_table(g, n, field).kernel_of(a);
}

KStats k_stats(const LayeredGraph& g, std::size_t n, const std::vector<VertexId>& A) {
  auto part = class_partition(g, n, A);
  KStats s{part.k(), part.k_touching(), successors(g, n, A).size()};
  if (kappa_combinatorial(g, n, A).dim() != s.k) throw std::logic_error("kappa dimension differs from k");
  return s;
}

DualReport quadratic_dual_check(const LayeredGraph& g, std::size_t n, const Field& field) {
  auto uniform = is_uniform(g);
  if (!uniform.uniform)
    throw Error(ErrorKind::NotUniform, "vertex " + to_string(*uniform.witness) + " splits its successors");
  Subspace rel = relation_space(g, n, field);
  Subspace gr = gr_quadratic_space(g, n, field);
  DualReport r;
  r.relation_dim = rel.dim();
  r.gr_dim = gr.dim();
  r.ambient = rel.ambient_dim();
  r.annihilator_matches = gr.annihilator() == rel;
  return r;
}

bool iso_condition_check(const LayeredGraph& g1, const LayeredGraph& g2, const std::vector<Matrix>& level_maps) {
  if (g1.levels() != g2.levels()) throw Error(ErrorKind::DimensionMismatch, "level sizes differ");
  if (level_maps.size() != g1.num_levels())
    throw Error(ErrorKind::DimensionMismatch, "expected one map per level, index 0 included");
  for (std::size_t n = 1; n < level_maps.size(); ++n) {
    const auto& m = level_maps[n];
    if (m.rows() != g1.level_size(n) || m.cols() != g1.level_size(n) || !is_invertible(m))
      throw Error(ErrorKind::DimensionMismatch, "map on level " + std::to_string(n) + " is not an invertible square");
  }
  for (std::size_t n = 2; n < g1.num_levels(); ++n) {
    const Field& field = level_maps[n].field();
    for (std::size_t v = 0; v < g1.level_size(n); ++v) {
      Subspace source = kappa_combinatorial(g1, n, {{n, v}}, field).image(level_maps[n - 1]);
      Subspace target = kappa_of_element(g2, n, level_maps[n].row(v), field);
      if (!(source == target)) return false;
    }
  }
  return true;
}

BAlgebra::BAlgebra(LayeredGraph g, Field field) : graph_(std::move(g)), field_(field) {}

const ProductTable& BAlgebra::products(std::size_t n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(n);
    if (it != tables_.end()) return *it->second;
  }
  auto table = std::make_shared<const ProductTable>(product_table(graph_, n, field_));
  std::lock_guard lock(mutex_);
  return *tables_.emplace(n, std::move(table)).first->second;
}

std::size_t BAlgebra::dim(std::size_t length, std::size_t weight) const {
  {
    std::lock_guard lock(mutex_);
    auto it = dims_.find({length, weight});
    if (it != dims_.end()) return it->second;
  }
  std::size_t d = component(graph_, length, weight, field_).dim;
  std::lock_guard lock(mutex_);
  return dims_.emplace(std::make_pair(length, weight), d).first->second;
}

std::vector<std::vector<std::size_t>> hilbert_table_B(const LayeredGraph& g, std::size_t max_length,
                                                      std::size_t max_weight, const Field& field) {
  std::vector<std::vector<std::size_t>> table(max_length + 1, std::vector<std::size_t>(max_weight + 1, 0));
  for (std::size_t m = 0; m <= max_length; ++m)
    for (std::size_t n = 0; n <= max_weight; ++n) table[m][n] = component(g, m, n, field).dim;
  return table;
}

std::vector<std::vector<std::size_t>> hilbert_table_grA(const LayeredGraph& g, std::size_t max_length,
                                                        std::size_t max_weight) {
  std::vector<std::vector<std::size_t>> table(max_length + 1, std::vector<std::size_t>(max_weight + 1, 0));
  table[0][0] = 1;
  for (std::size_t m = 1; m <= max_length; ++m)
    for (std::size_t n = m; n <= max_weight && n <= m * g.top_level(); ++n) table[m][n] = rgr_quotient_dim(g, m, n);
  return table;
}

}  // namespace laga
