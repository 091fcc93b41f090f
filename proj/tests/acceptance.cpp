// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "examples.hpp"
#include "laga/algebra_view.hpp"
#include "laga/b_algebra.hpp"
#include "laga/builders.hpp"
#include "laga/combinatorics.hpp"
#include "laga/gr_algebra.hpp"
#include "laga/isomorphism.hpp"
#include "laga/reconstruct.hpp"
#include "random_graphs.hpp"

using namespace laga;
using laga::testing::Rng;

namespace {

constexpr std::uint64_t kSeed = 20261015;
const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<VertexId> support(std::size_t n, const Vector& a) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out.push_back({n, i});
  return out;
}

// 1: kernel of left multiplication agrees with the class-sum span.
Outcome kappa_oracle() {
  Outcome o;
  Rng rng(kSeed);
  std::vector<LayeredGraph> graphs;
  for (int i = 0; i < 100; ++i) graphs.push_back(laga::testing::random_uniform(rng, 4, 6));
  graphs.push_back(build_boolean(3));
  graphs.push_back(build_boolean(4));
  graphs.push_back(build_subspace_lattice(2, 3));
  std::size_t checks = 0;
  for (const auto& g : graphs)
    for (std::size_t n = 1; n <= g.top_level(); ++n) {
      ProductTable table = product_table(g, n, Q);
      const std::size_t size = g.level_size(n);
      std::vector<Vector> elements;
      for (std::size_t v = 0; v < size; ++v) {
        Vector e(size, Scalar(0));
        e[v] = 1;
        elements.push_back(e);
        for (std::size_t w = v + 1; w < size; ++w) {
          Vector s = e;
          s[w] = 1;
          elements.push_back(s);
        }
      }
      for (int r = 0; r < 50; ++r) {
        Vector a(size);
        for (auto& x : a) x = static_cast<long>(rng() % 5) - 2;
        elements.push_back(a);
      }
      for (const auto& a : elements) {
        Subspace kernel = table.kernel_of(a);
        auto A = support(n, a);
        Subspace combinatorial = kappa_combinatorial(g, n, A, Q);
        o.require(kernel == combinatorial, "kernel differs from class-sum span on level " + std::to_string(n));
        o.require(combinatorial.dim() == class_partition(g, n, A).k(), "dim kappa differs from k");
        ++checks;
      }
    }
  o.detail = o.ok ? std::to_string(checks) + " elements on " + std::to_string(graphs.size()) + " graphs" : o.detail;
  return o;
}

// 2: counting identities for random (graph, T).
Outcome identities() {
  Outcome o;
  Rng rng(kSeed + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = laga::testing::random_layered(rng, 5, 6);
    std::size_t level = 1 + laga::testing::pick(rng, g.top_level());
    auto T = laga::testing::random_subset(rng, g, level);
    try {
      check_identities(g, level, T);
    } catch (const std::logic_error& e) {
      o.require(false, std::string("trial ") + std::to_string(trial) + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "1000 pairs";
  return o;
}

// 3: Boolean lattices on 3 and 4 points.
Outcome boolean_quantities() {
  Outcome o;
  for (std::size_t n : {3u, 4u}) {
    auto g = build_boolean(n);
    auto view = algebra_view(g, F3, kSeed);
    auto basis = upper_vertex_like_basis(view, 2);
    for (const auto& kappa : basis.kappas) o.require(kappa.dim() == n - 1, "level-2 kappa dimension");
    for (std::size_t w = 0; w < g.level_size(1); ++w) {
      std::size_t missing = 0;
      for (std::size_t v = 0; v < g.level_size(2); ++v) missing += g.has_edge({2, v}, {1, w}) ? 0 : 1;
      o.require(missing == binomial(n - 1, 2), "count of level-2 vertices missing a point");
    }
    auto rec = reconstruct_boolean(view, n);
    for (const auto& set : rec.report.at("level_one_sets"))
      o.require(set.size() == binomial(n - 1, 2), "recovered level-one set size");
    for (std::size_t i = 1; i <= n; ++i)
      o.require(outdegree_multiset(view, i) == std::vector<std::size_t>(binomial(n, i), i),
                "out-degree multiset on level " + std::to_string(i));
  }
  if (o.ok) o.detail = "n = 3, 4 from scrambled views";
  return o;
}

// 4: subspaces of F_2^3.
Outcome subspace_quantities() {
  Outcome o;
  auto g = build_subspace_lattice(2, 3);
  o.require(g.level_size(1) == 7 && g.level_size(2) == 7, "level sizes");
  auto view = algebra_view(g, F3, kSeed);
  auto basis = upper_vertex_like_basis(view, 2);
  for (auto k : basis.ks) o.require(view.level_dims[1] - k + 1 == 3, "plane-vector out-degree");
  const std::uint64_t q = 2, n = 3;
  std::uint64_t formula = (q * q * q - q * q) * (q * q - 1) / ((q - 1) * (q * q - 1));
  o.require(formula == 4, "formula for the sets of planes missing a line");
  for (std::size_t w = 0; w < 7; ++w) {
    std::size_t missing = 0;
    for (std::size_t v = 0; v < 7; ++v) missing += g.has_edge({2, v}, {1, w}) ? 0 : 1;
    o.require(missing == formula, "planes missing a line");
  }
  auto rec = reconstruct_subspace(view, 2, n);
  for (const auto& set : rec.report.at("level_one_sets")) o.require(set.size() == formula, "recovered set size");
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    for (std::size_t j = i + 1; j < basis.vectors.size(); ++j)
      o.require(intersection_size(view, 2, basis.vectors[i], basis.vectors[j]).value == 1, "pairwise intersection");
  if (o.ok) o.detail = "|A_p| = 4, 21 pairs";
  return o;
}

// 5: scrambled views rebuilt and certified.
Outcome certified_reconstruction() {
  Outcome o;
  double slowest = 0;
  struct Case {
    std::string name;
    LayeredGraph g;
    std::function<Reconstruction(const AlgebraView&)> run;
  };
  std::vector<Case> cases{
      {"boolean(3)", build_boolean(3), [](const AlgebraView& v) { return reconstruct_boolean(v, 3); }},
      {"boolean(4)", build_boolean(4), [](const AlgebraView& v) { return reconstruct_boolean(v, 4); }},
      {"subspace(2,3)", build_subspace_lattice(2, 3), [](const AlgebraView& v) { return reconstruct_subspace(v, 2, 3); }}};
  for (const auto& c : cases)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto start = std::chrono::steady_clock::now();
      auto rec = c.run(algebra_view(c.g, F3, seed));
      double t = seconds_since(start);
      slowest = std::max(slowest, t);
      o.require(rec.certified && are_isomorphic(rec.graph, c.g).has_value(),
                c.name + " seed " + std::to_string(seed) + " not certified");
      o.require(t <= 120.0, c.name + " seed " + std::to_string(seed) + " over 120 s");
    }
  if (o.ok) {
    std::ostringstream s;
    s << "30 runs, slowest " << slowest << " s";
    o.detail = s.str();
  }
  return o;
}

// 6: quadraticity detector.
Outcome quadraticity() {
  Outcome o;
  for (const auto& g : {build_boolean(3), build_complete_layered({1, 2, 2, 2}), build_subspace_lattice(2, 3)})
    o.require(is_quadratic_to_degree(g, 4).quadratic, "quadratic graph reported non-quadratic");
  auto witness = is_quadratic_to_degree(laga::testing::nonuniform_witness(), 4);
  o.require(!witness.quadratic && witness.failing.has_value(), "witness not detected");
  if (o.ok)
    o.detail = "witness fails at (" + std::to_string(witness.failing->first) + "," +
               std::to_string(witness.failing->second) + "): " + std::to_string(witness.full_dim) + " vs " +
               std::to_string(witness.quadratic_dim);
  return o;
}

// 7: monomial basis count against the rank of the relation matrix.
Outcome basis_consistency() {
  Outcome o;
  Rng rng(kSeed + 7);
  std::vector<LayeredGraph> graphs{build_boolean(3), laga::testing::random_uniform(rng, 4, 4),
                                   laga::testing::random_uniform(rng, 4, 4)};
  std::size_t checks = 0;
  for (const auto& g : graphs)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 0; n <= 8; ++n) {
        o.require(enumerate_B_basis(g, m, n).size() == rgr_quotient_dim_linear(g, m, n),
                  "bidegree (" + std::to_string(m) + "," + std::to_string(n) + ")");
        ++checks;
      }
  if (o.ok) o.detail = std::to_string(checks) + " bidegrees";
  return o;
}

// 8: the two quadratic relation spaces are annihilators of each other.
Outcome quadratic_duality() {
  Outcome o;
  for (const auto& g : {build_boolean(3), build_boolean(4), build_complete_layered({1, 3, 3}),
                        build_subspace_lattice(2, 3)})
    for (std::size_t n = 1; n <= g.top_level(); ++n) {
      auto r = quadratic_dual_check(g, n, Q);
      o.require(r.annihilator_matches, "annihilator mismatch on level " + std::to_string(n));
      o.require(r.dims_complement(), "dimensions do not add up on level " + std::to_string(n));
    }
  if (o.ok) o.detail = "4 graphs, every level";
  return o;
}

// 9: moving the successor of an out-degree-one vertex is invisible to B.
Outcome retarget_pair() {
  Outcome o;
  auto a = laga::testing::retarget_pair(false), b = laga::testing::retarget_pair(true);
  for (std::size_t n = 1; n <= a.top_level(); ++n)
    o.require(relation_space(a, n).to_json().dump() == relation_space(b, n).to_json().dump(),
              "relation spaces differ on level " + std::to_string(n));
  o.require(hilbert_table_B(a, 3, 8) == hilbert_table_B(b, 3, 8), "dimension tables differ");
  o.require(!are_isomorphic(a, b).has_value(), "graphs are isomorphic");
  if (o.ok) o.detail = "same relations and dims up to (3,8), not isomorphic";
  return o;
}

// 10: leading terms of the e-tilde elements.
Outcome leading_terms() {
  Outcome o;
  auto g = build_boolean(3);
  std::size_t checks = 0;
  for (const auto& v : g.vertices())
    for (std::size_t k = 0; k <= v.level; ++k) {
      auto e = e_tilde(g, v, k);
      std::size_t best = 0, count = 0;
      Word top;
      for (const auto& [w, c] : e.terms()) {
        if (count == 0 || weight(w) > best) {
          best = weight(w);
          count = 1;
          top = w;
        } else if (weight(w) == best) {
          ++count;
        }
      }
      auto c = e.coefficient(top);
      o.require(count == 1 && top == monomial_m(g, v, k) && (c == 1 || c == -1),
                "vertex " + to_string(v) + ", k = " + std::to_string(k));
      ++checks;
    }
  if (o.ok) o.detail = std::to_string(checks) + " (vertex, k) pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "kappa oracle equivalence", 60, kappa_oracle},
      {2, "successor and class count identities", 10, identities},
      {3, "Boolean lattice quantities", 0, boolean_quantities},
      {4, "subspace lattice quantities", 0, subspace_quantities},
      {5, "certified reconstruction", 0, certified_reconstruction},
      {6, "quadraticity detector", 0, quadraticity},
      {7, "gr A basis consistency", 0, basis_consistency},
      {8, "quadratic duality", 0, quadratic_duality},
      {9, "edge-retarget pair", 0, retarget_pair},
      {10, "e-tilde leading terms", 0, leading_terms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double t = seconds_since(start);
    if (c.limit > 0 && t > c.limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    std::printf("criterion %2d %s  %s: %s [%.2f s]\n", c.id, o.ok ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.c_str(), t);
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
