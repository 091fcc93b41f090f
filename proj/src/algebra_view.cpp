#include "laga/algebra_view.hpp"

#include <random>
#include <string>

#include "laga/combinatorics.hpp"
#include "laga/error.hpp"

namespace laga {

const ProductTable& AlgebraView::product(std::size_t n) const {
  if (n == 0 || n > products.size())
    throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(n) + " has no products in this view");
  return products[n - 1];
}

nlohmann::json AlgebraView::to_json() const {
  nlohmann::json j;
  j["format"] = "laga-algebra-view";
  j["field"] = field.name();
  j["level_dims"] = level_dims;
  j["scrambled"] = scrambled;
  auto tables = nlohmann::json::array();
  for (std::size_t n = 1; n <= products.size(); ++n) {
    auto t = products[n - 1].to_json();
    t["level"] = n;
    tables.push_back(std::move(t));
  }
  j["products"] = std::move(tables);
  return j;
}

AlgebraView AlgebraView::from_json(const nlohmann::json& j) {
  try {
    if (j.value("format", std::string()) != "laga-algebra-view")
      throw Error(ErrorKind::InvalidArgument, "not an algebra view document");
    AlgebraView view;
    view.field = Field::parse(j.at("field").get<std::string>());
    view.level_dims = j.at("level_dims").get<std::vector<std::size_t>>();
    view.scrambled = j.value("scrambled", false);
    if (view.level_dims.empty()) throw Error(ErrorKind::InvalidArgument, "view has no levels");
    const auto& tables = j.at("products");
    if (tables.size() != view.level_dims.size() - 1)
      throw Error(ErrorKind::InvalidArgument, "expected one product table per level above 0");
    for (std::size_t n = 1; n <= tables.size(); ++n) {
      auto table = ProductTable::from_json(view.field, tables[n - 1]);
      if (table.rows() != view.level_dims[n] || table.cols() != view.level_dims[n - 1])
        throw Error(ErrorKind::InvalidArgument, "product table of level " + std::to_string(n) + " has wrong shape");
      view.products.push_back(std::move(table));
    }
    return view;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed view: ") + e.what());
  }
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Scalar random_nonzero(Rng& rng, const Field& field) {
  if (field.is_prime()) return field.from_int(static_cast<long>(1 + pick(rng, field.characteristic() - 1)));
  static const long choices[] = {1, -1, 2, -2, 3};
  return Scalar(choices[pick(rng, 5)]);
}

Scalar random_scalar(Rng& rng, const Field& field) {
  if (field.is_prime()) return field.from_int(static_cast<long>(pick(rng, field.characteristic())));
  return Scalar(static_cast<long>(pick(rng, 5)) - 2);
}

Matrix random_invertible(Rng& rng, const Field& field, std::size_t n) {
  while (true) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, random_scalar(rng, field));
    if (is_invertible(m)) return m;
  }
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[pick(rng, i)]);
  return perm;
}

std::string name(const LayeredGraph& g, std::size_t level, std::size_t index) {
  return g.label({level, index});
}

}  // namespace

ScramblePlan scramble_plan(const LayeredGraph& g, const Field& field, std::uint64_t seed) {
  if (!is_uniform(g).uniform) throw Error(ErrorKind::NotUniform, "scrambling needs a uniform graph");
  Rng rng(seed);
  const std::size_t top = g.top_level();
  ScramblePlan plan{{}, {}, g, {}, {}, {}};
  for (std::size_t n = 0; n <= top; ++n) plan.level_maps.push_back(Matrix::identity(field, g.level_size(n)));

  // unipotent moves v -> v + c w with kappa_v inside kappa_w, and swaps of equal kappas
  for (std::size_t n = top; n >= 1; --n) {
    const std::size_t size = g.level_size(n);
    std::vector<Subspace> kappas;
    for (std::size_t v = 0; v < size; ++v) kappas.push_back(kappa_combinatorial(g, n, {{n, v}}, field));
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t v = 0; v < size; ++v)
      for (std::size_t w = 0; w < size; ++w)
        if (v != w && kappas[w].contains(kappas[v])) candidates.emplace_back(v, w);
    if (candidates.empty()) continue;
    for (std::size_t attempt = 0; attempt < 3 * size; ++attempt) {
      auto [v, w] = candidates[pick(rng, candidates.size())];
      Matrix previous = plan.level_maps[n];
      Matrix& m = plan.level_maps[n];
      std::string move;
      if (kappas[v] == kappas[w] && rng() % 2 == 0) {
        for (std::size_t c = 0; c < size; ++c) {
          Scalar tmp = m.at(v, c);
          m.raw(v, c) = m.at(w, c);
          m.raw(w, c) = tmp;
        }
        move = "swap " + name(g, n, v) + " " + name(g, n, w);
      } else {
        Scalar c = random_nonzero(rng, field);
        for (std::size_t col = 0; col < size; ++col) {
          Scalar value = m.at(v, col);
          field.add_mul(value, c, m.at(w, col));
          m.set(v, col, value);
        }
        move = name(g, n, v) + " += " + to_string(c) + " * " + name(g, n, w);
      }
      if (iso_condition_check(g, g, plan.level_maps))
        plan.moves.push_back("level " + std::to_string(n) + ": " + move);
      else
        plan.level_maps[n] = previous;
    }
  }

  for (std::size_t n = 1; n <= top; ++n) {
    Scalar c = random_nonzero(rng, field);
    Matrix scaled = plan.level_maps[n];
    for (std::size_t r = 0; r < scaled.rows(); ++r)
      for (std::size_t col = 0; col < scaled.cols(); ++col) scaled.set(r, col, field.mul(c, scaled.at(r, col)));
    std::swap(plan.level_maps[n], scaled);
    if (iso_condition_check(g, g, plan.level_maps))
      plan.moves.push_back("level " + std::to_string(n) + ": scale by " + to_string(c));
    else
      std::swap(plan.level_maps[n], scaled);
  }

  // relabel every level by a random permutation
  plan.relabel.push_back({0});
  for (std::size_t n = 1; n <= top; ++n) plan.relabel.push_back(random_permutation(rng, g.level_size(n)));
  std::vector<Edge> edges;
  for (const auto& [tail, head] : g.edges())
    edges.push_back({{tail.level, plan.relabel[tail.level][tail.index]},
                     {head.level, plan.relabel[head.level][head.index]}});
  std::map<VertexId, std::string> labels;
  for (const auto& [v, label] : g.labels()) labels[{v.level, plan.relabel[v.level][v.index]}] = label;
  plan.relabeled = LayeredGraph::build(g.levels(), edges, g.flags(), labels);
  std::vector<Matrix> permutations;
  for (std::size_t n = 0; n <= top; ++n) {
    Matrix p(field, g.level_size(n), g.level_size(n));
    for (std::size_t i = 0; i < g.level_size(n); ++i) p.set(i, plan.relabel[n][i], field.one());
    permutations.push_back(std::move(p));
  }
  if (!is_isomorphism(g, plan.relabeled, plan.relabel) || !iso_condition_check(g, plan.relabeled, permutations))
    throw std::logic_error("relabeling failed its own certificate");

  // basis of level n: vertex pi(i) of the relabeled graph carries the image of vertex i
  for (std::size_t n = 0; n <= top; ++n) plan.bases.push_back(permutations[n].transpose() * plan.level_maps[n]);
  for (std::size_t n = 1; n <= top; ++n)
    plan.target_changes.push_back(random_invertible(rng, field, product_table(g, n, field).target_dim()));
  return plan;
}

AlgebraView algebra_view(const LayeredGraph& g, const Field& field, std::optional<std::uint64_t> seed) {
  if (!is_uniform(g).uniform) throw Error(ErrorKind::NotUniform, "the algebra view needs a uniform graph");
  AlgebraView view;
  view.field = field;
  view.level_dims = g.levels();
  view.scrambled = seed.has_value();
  std::optional<ScramblePlan> plan;
  if (seed) plan = scramble_plan(g, field, *seed);
  for (std::size_t n = 1; n <= g.top_level(); ++n) {
    ProductTable table = product_table(g, n, field);
    if (!plan) {
      view.products.push_back(std::move(table));
      continue;
    }
    const Matrix& upper = plan->bases[n];
    const Matrix& lower = plan->bases[n - 1];
    const Matrix& change = plan->target_changes[n - 1];
    ProductTable scrambled(field, table.rows(), table.cols(), table.target_dim());
    for (std::size_t i = 0; i < table.rows(); ++i) {
      Matrix products = lower * table.left_map(upper.row(i)) * change;
      for (std::size_t j = 0; j < table.cols(); ++j) scrambled.product(i, j) = products.row(j);
    }
    view.products.push_back(std::move(scrambled));
  }
  return view;
}

}  // namespace laga
