#include <doctest.h>

#include "examples.hpp"
#include "laga/builders.hpp"
#include "laga/combinatorics.hpp"
#include "laga/error.hpp"
#include "laga/gr_algebra.hpp"
#include "laga/matrix.hpp"
#include "laga/subspace.hpp"
#include "random_graphs.hpp"

using namespace laga;
using laga::testing::Rng;

namespace {

const Field Q = Field::rationals();

Word random_word(Rng& rng, const LayeredGraph& g, std::size_t length) {
  std::vector<VertexId> pool;
  for (const auto& v : g.vertices())
    if (v.level > 0) pool.push_back(v);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(pool[testing::pick(rng, pool.size())]);
  return w;
}

// Span of the relations of one bidegree inside the word coordinates.
Subspace relation_span(const LayeredGraph& g, std::size_t m, std::size_t n, const std::vector<Word>& words) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<Vector> rows;
  for (const auto& rel : rgr_relations(g, m, n)) {
    Vector v(words.size(), Scalar(0));
    for (const auto& [w, c] : rel.terms()) v[index.at(w)] = c;
    rows.push_back(v);
  }
  return Subspace::span(Q, words.size(), rows);
}

LayeredGraph tree() {
  return LayeredGraph::build({1, 2, 2},
                             {{{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}, {{2, 0}, {1, 0}}, {{2, 1}, {1, 1}}}, {true, true});
}

}  // namespace

TEST_CASE("distinguished paths") {
  auto b3 = build_boolean(3);
  CHECK(distinguished_path(b3, {2, 0}) == VertexPath{{2, 0}, {1, 0}, {0, 0}});
  CHECK(b3.label({1, 0}) == "{1}");
  CHECK(distinguished_path(b3, {1, 2}) == VertexPath{{1, 2}, {0, 0}});
  CHECK(distinguished_path(build_complete_layered({1, 2, 2}), {2, 1}) == VertexPath{{2, 1}, {1, 0}, {0, 0}});
}

TEST_CASE("e_tilde expansion") {
  auto b3 = build_boolean(3);
  CHECK(e_tilde(b3, {2, 0}, 0) == FreeElement::constant(Q, 1));
  CHECK(e_tilde(b3, {2, 0}, 1) == FreeElement::monomial(Q, {{2, 0}}, -1));
  auto full = e_tilde(b3, {3, 0}, 3);
  CHECK(full.coefficient(monomial_m(b3, {3, 0}, 3)) != 0);
  CHECK_THROWS_AS(e_tilde(b3, {2, 0}, 3), Error);
  // direct expansion for a level-2 vertex: (t - (v - w))(t - w)
  auto k2 = e_tilde(b3, {2, 0}, 2);
  auto expected = FreeElement::monomial(Q, {{2, 0}, {1, 0}}) - FreeElement::monomial(Q, {{1, 0}, {1, 0}});
  CHECK(k2 == expected);

  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_layered(rng, 5, 3);
    for (const auto& v : g.vertices())
      for (std::size_t k = 0; k <= v.level; ++k) {
        auto e = e_tilde(g, v, k);
        std::size_t best = 0, count = 0;
        Word top;
        for (const auto& [w, c] : e.terms()) {
          CHECK(w.size() == k);
          if (weight(w) > best || count == 0) {
            best = weight(w);
            count = 1;
            top = w;
          } else if (weight(w) == best) {
            ++count;
          }
        }
        CHECK(count == 1);
        CHECK(top == monomial_m(g, v, k));
        auto c = e.coefficient(top);
        CHECK((c == 1 || c == -1));
      }
  }
}

TEST_CASE("monomials and skeletons") {
  auto b3 = build_boolean(3);
  CHECK(monomial_m(b3, {2, 0}, 0).empty());
  CHECK(monomial_m(b3, {2, 0}, 1) == Word{{2, 0}});
  CHECK(monomial_m(b3, {2, 0}, 2) == Word{{2, 0}, {1, 0}});
  CHECK_THROWS_AS(monomial_m(b3, {1, 0}, 2), Error);

  auto m = monomial_m(b3, {3, 0}, 3);
  CHECK(skeleton(b3, m) == std::vector<std::size_t>{1, 4});
  CHECK(skeleton(b3, Word{{1, 1}}) == std::vector<std::size_t>{1, 2});
  auto a = monomial_m(b3, {3, 0}, 2);
  auto b = monomial_m(b3, {2, 2}, 2);
  Word joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  CHECK(skeleton(b3, joined) == std::vector<std::size_t>{1, 3, 5});
  CHECK(to_pair_sequence(b3, joined) == PairSequence{{{3, 0}, 2}, {{2, 2}, 2}});
  CHECK(to_pair_sequence(b3, m) == PairSequence{{{3, 0}, 3}});
  CHECK(to_pair_sequence(b3, Word{{1, 2}}) == PairSequence{{{1, 2}, 1}});

  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_word(rng, b3, 1 + testing::pick(rng, 5));
    CHECK(monomial_of(b3, to_pair_sequence(b3, w)) == w);
  }
}

TEST_CASE("normalize") {
  auto b2 = build_boolean(2);
  Word top_second{{2, 0}, {1, 1}};
  std::vector<NormalizeStep> trace;
  auto out = normalize(b2, top_second, &trace);
  CHECK(out == Word{{2, 0}, {1, 0}});
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].witness == VertexPath{{2, 0}, {1, 1}});
  auto words = words_of_bidegree(b2, 2, 3);
  auto span = relation_span(b2, 2, 3, words);
  Vector diff(words.size(), Scalar(0));
  diff[std::find(words.begin(), words.end(), top_second) - words.begin()] = 1;
  diff[std::find(words.begin(), words.end(), out) - words.begin()] = -1;
  CHECK(span.contains(diff));

  auto b3 = build_boolean(3);
  Word already{{1, 0}, {2, 0}};
  CHECK(normalize(b3, already) == already);

  Rng rng(8);
  for (const auto& g : {b3, build_subspace_lattice(2, 3), testing::random_uniform(rng, 4, 4)}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto w = random_word(rng, g, 1 + testing::pick(rng, 3));
      auto n = normalize(g, w);
      CHECK(n == normalize(g, w));
      CHECK(n.size() == w.size());
      CHECK(weight(n) == weight(w));
      CHECK(is_basis_sequence(g, to_pair_sequence(g, n)));
      if (n == w) continue;
      auto ws = words_of_bidegree(g, w.size(), weight(w));
      auto span = relation_span(g, w.size(), weight(w), ws);
      Vector d(ws.size(), Scalar(0));
      d[std::find(ws.begin(), ws.end(), w) - ws.begin()] = 1;
      d[std::find(ws.begin(), ws.end(), n) - ws.begin()] = -1;
      CHECK(span.contains(d));
    }
  }
}

TEST_CASE("basis enumeration") {
  auto b3 = build_boolean(3);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(enumerate_B_basis(b3, 1, n).size() == b3.level_size(n));
  CHECK(enumerate_B_basis(build_boolean(2), 2, 3).size() == 3);
  CHECK(enumerate_B_basis(b3, 3, 2).empty());
  for (const auto& b : enumerate_B_basis(b3, 3, 6)) {
    CHECK(is_basis_sequence(b3, b));
    auto w = monomial_of(b3, b);
    CHECK(w.size() == 3);
    CHECK(weight(w) == 6);
    CHECK(to_pair_sequence(b3, w) == b);
  }
}

TEST_CASE("path relations") {
  auto t = tree();
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 6; ++n) CHECK(rgr_relations(t, m, n).empty());
  auto b2 = build_boolean(2);
  auto rels = rgr_relations(b2, 2, 3);
  auto gen = FreeElement::monomial(Q, {{2, 0}, {1, 0}}) - FreeElement::monomial(Q, {{2, 0}, {1, 1}});
  bool found = false;
  for (const auto& r : rels) found |= r == gen || r == gen.scaled(-1);
  CHECK(found);

  // two-letter part equals span{v(u - w)} on uniform graphs
  Rng rng(12);
  for (const auto& g : {build_boolean(3), testing::random_uniform(rng, 4, 4), testing::random_uniform(rng, 4, 4)})
    for (std::size_t n = 3; n <= 2 * g.top_level(); ++n) {
      auto words = words_of_bidegree(g, 2, n);
      auto span = relation_span(g, 2, n, words);
      std::vector<Vector> gens;
      std::map<Word, std::size_t> index;
      for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
      for (const auto& w : words) {
        if (w[0].level < 2 || w[1].level + 1 != w[0].level) continue;
        const auto& succ = g.successors(w[0]);
        for (std::size_t k = 1; k < succ.size(); ++k) {
          Vector v(words.size(), Scalar(0));
          v[index.at({w[0], {w[0].level - 1, succ[0]}})] = 1;
          v[index.at({w[0], {w[0].level - 1, succ[k]}})] = -1;
          gens.push_back(v);
        }
      }
      CHECK(span == Subspace::span(Q, words.size(), gens));
    }
}

TEST_CASE("quotient dimensions agree three ways") {
  Rng rng(21);
  for (const auto& g : {build_boolean(3), testing::random_uniform(rng, 4, 3), testing::random_uniform(rng, 4, 3)})
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = m; n <= 8; ++n) {
        auto uf = rgr_quotient_dim(g, m, n);
        CHECK(uf == rgr_quotient_dim_linear(g, m, n));
        CHECK(uf == rgr_quotient_dim_linear(g, m, n, Field::prime(3)));
        CHECK(uf == enumerate_B_basis(g, m, n).size());
      }
}

TEST_CASE("quadraticity detector") {
  CHECK(is_quadratic_to_degree(build_boolean(3), 4).quadratic);
  CHECK(is_quadratic_to_degree(tree(), 4).quadratic);
  auto r = is_quadratic_to_degree(testing::nonuniform_witness(), 4);
  CHECK_FALSE(r.quadratic);
  REQUIRE(r.failing);
  CHECK(r.failing->first == 3);
  CHECK(r.failing->second == 6);
  CHECK(r.full_dim + 1 == r.quadratic_dim);
  CHECK_THROWS_AS(is_quadratic_to_degree(build_boolean(3), 4, 10), Error);
}
