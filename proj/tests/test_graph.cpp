#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "laga/builders.hpp"
#include "laga/combinatorics.hpp"
#include "laga/error.hpp"
#include "laga/graph.hpp"
#include "laga/graph_io.hpp"
#include "laga/isomorphism.hpp"
#include "examples.hpp"
#include "random_graphs.hpp"

using namespace laga;
using laga::testing::Rng;
using laga::testing::nonuniform_witness;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
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

LayeredGraph permuted(const LayeredGraph& g, Rng& rng) {
  std::vector<std::vector<std::size_t>> perm;
  for (std::size_t l = 0; l < g.num_levels(); ++l) {
    std::vector<std::size_t> p(g.level_size(l));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[testing::pick(rng, i)]);
    perm.push_back(p);
  }
  std::vector<Edge> edges;
  for (const auto& [t, h] : g.edges())
    edges.push_back({{t.level, perm[t.level][t.index]}, {h.level, perm[h.level][h.index]}});
  return LayeredGraph::build(g.levels(), edges, g.flags());
}

// Uniformity through maximal downward paths: all paths from v to level 0 are
// linked by single-vertex changes.
bool uniform_by_paths(const LayeredGraph& g) {
  for (const auto& v : g.vertices()) {
    if (v.level < 2) continue;
    std::vector<std::vector<VertexId>> paths;
    std::vector<VertexId> cur{v};
    std::function<void()> rec = [&] {
      if (cur.back().level == 0) {
        paths.push_back(cur);
        return;
      }
      auto top = cur.back();
      for (auto s : g.successors(top)) {
        cur.push_back({top.level - 1, s});
        rec();
        cur.pop_back();
      }
    };
    rec();
    std::vector<bool> seen(paths.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < paths.size(); ++b) {
        if (seen[b]) continue;
        std::size_t diff = 0;
        for (std::size_t i = 0; i < paths[a].size(); ++i) diff += paths[a][i] != paths[b][i];
        if (diff <= 1) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build validates edges and flags") {
  auto g = LayeredGraph::build({1, 2}, {{{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}});
  CHECK(g.edge_count() == 2);
  CHECK(kind_of([] { LayeredGraph::build({1, 1}, {{{1, 0}, {1, 0}}}); }) == ErrorKind::EdgeLevelMismatch);
  CHECK(kind_of([] {
          LayeredGraph::build({1, 2, 2}, {{{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}, {{2, 0}, {1, 0}}}, {false, true});
        }) == ErrorKind::EmptySuccessor);
  CHECK(kind_of([] { LayeredGraph::build({2, 1}, {{{1, 0}, {0, 0}}}, {true, false}); }) ==
        ErrorKind::MultipleMinimal);
  CHECK(kind_of([] { LayeredGraph::build({1, 1}, {{{1, 3}, {0, 0}}}); }) == ErrorKind::InvalidArgument);
  auto dup = LayeredGraph::build({1, 1}, {{{1, 0}, {0, 0}}, {{1, 0}, {0, 0}}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("boolean lattice") {
  auto b3 = build_boolean(3);
  CHECK(b3.levels() == std::vector<std::size_t>{1, 3, 3, 1});
  auto b4 = build_boolean(4);
  CHECK(b4.level_size(1) == 4);
  CHECK(b4.level_size(2) == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(b4.out_degree({2, i}) == 2);
  CHECK(b3.label({2, 0}) == "{1,2}");
  CHECK(b3.label({2, 2}) == "{2,3}");
  CHECK(b3.successors({2, 0}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace lattice sizes follow Gaussian binomials") {
  auto s23 = build_subspace_lattice(2, 3);
  CHECK(s23.levels() == std::vector<std::size_t>{1, 7, 7, 1});
  for (std::size_t i = 0; i < 7; ++i) CHECK(s23.out_degree({2, i}) == 3);
  auto s32 = build_subspace_lattice(3, 2);
  CHECK(s32.levels() == std::vector<std::size_t>{1, 4, 1});
  // brute force: nonzero vectors of F_3^2 modulo scalars
  std::set<std::vector<int>> lines;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      std::set<std::vector<int>> line;
      for (int c = 1; c < 3; ++c) line.insert({a * c % 3, b * c % 3});
      lines.insert(*line.begin());
    }
  CHECK(lines.size() == 4);
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 3}, {2, 4}, {3, 3}, {5, 2}, {3, 4}}) {
    auto g = build_subspace_lattice(q, n);
    for (std::size_t k = 0; k <= n; ++k) CHECK(g.level_size(k) == gaussian_binomial(q, n, k));
  }
  CHECK(kind_of([] { build_subspace_lattice(4, 2); }) == ErrorKind::UnsupportedField);
  CHECK(kind_of([] { build_subspace_lattice(6, 2); }) == ErrorKind::UnsupportedField);
}

TEST_CASE("complete layered, restrict and upper part") {
  CHECK(build_complete_layered({1, 2, 2}).edge_count() == 6);
  auto chain = build_complete_layered({1, 1, 1});
  CHECK(chain.edge_count() == 2);
  CHECK(build_complete_layered({1, 3}).edge_count() == 3);
  auto b3 = build_boolean(3);
  CHECK(restrict(b3, 2).levels() == std::vector<std::size_t>{1, 3, 3});
  CHECK(restrict(b3, 3) == b3);
  auto r1 = restrict(build_boolean(4), 1);
  CHECK(r1.levels() == std::vector<std::size_t>{1, 4});
  CHECK(r1.edge_count() == 4);
  auto up = upper_part(b3, 2);
  CHECK(up.levels() == std::vector<std::size_t>{3, 1});
  CHECK(up.edge_count() == 3);
}

TEST_CASE("successors and class partitions") {
  auto b3 = build_boolean(3);
  auto s = successors(b3, 2, {{2, 0}});
  CHECK(s == std::vector<VertexId>{{1, 0}, {1, 1}});
  CHECK(successors(b3, 2, {}).empty());
  auto s23 = build_subspace_lattice(2, 3);
  CHECK(successors(s23, 2, {{2, 4}}).size() == 3);
  CHECK(kind_of([&] { successors(b3, 2, {{1, 0}}); }) == ErrorKind::MixedLevels);

  auto empty = class_partition(b3, 2, {});
  CHECK(empty.k() == 3);
  CHECK(empty.k_touching() == 0);
  auto all = class_partition(b3, 2, {{2, 0}, {2, 1}, {2, 2}});
  CHECK(all.k() == 1);
  CHECK(all.k_touching() == 1);
  auto c = class_partition(build_complete_layered({1, 2, 2}), 2, {{2, 0}});
  CHECK(c.classes == std::vector<std::vector<std::size_t>>{{0, 1}});
  auto p = class_partition(b3, 2, {{2, 2}});
  CHECK(p.classes == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK(p.k_touching() == 1);
}

TEST_CASE("counting identities on random graphs") {
  Rng rng(11);
  auto b4 = build_boolean(4);
  for (std::size_t l = 1; l <= 4; ++l)
    for (int t = 0; t < 10; ++t) CHECK_NOTHROW(check_identities(b4, l, testing::random_subset(rng, b4, l)));
  auto r = check_identities(b4, 2, {});
  CHECK(r.successor_count == 0);
  CHECK(r.k == r.ground_size);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_layered(rng, 4, 6);
    std::size_t level = 1 + testing::pick(rng, g.top_level());
    auto T = testing::random_subset(rng, g, level);
    auto report = check_identities(g, level, T);
    // oracle: plain set arithmetic
    std::set<std::size_t> covered;
    for (const auto& t : T)
      for (auto s : g.successors(t)) covered.insert(s);
    CHECK(report.successor_count == covered.size());
    CHECK(report.uncovered == g.level_size(level - 1) - covered.size());
    // recomputation and edge order independence
    auto again = class_partition(g, level, T);
    auto edges = g.edges();
    std::reverse(edges.begin(), edges.end());
    auto flipped = LayeredGraph::build(g.levels(), edges, g.flags());
    CHECK(class_partition(flipped, level, T).classes == again.classes);
    CHECK(class_partition(g, level, T).classes == again.classes);
  }
}

TEST_CASE("uniformity") {
  CHECK(is_uniform(build_boolean(4)).uniform);
  CHECK(is_uniform(build_subspace_lattice(2, 3)).uniform);
  CHECK(is_uniform(build_complete_layered({1, 3, 2, 2})).uniform);
  CHECK(is_uniform(build_complete_layered({1, 5})).uniform);
  auto w = is_uniform(nonuniform_witness());
  CHECK_FALSE(w.uniform);
  REQUIRE(w.witness);
  CHECK(*w.witness == VertexId{3, 0});
  CHECK(w.split_classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK_FALSE(is_uniform_downup(nonuniform_witness()));
  CHECK_FALSE(uniform_by_paths(nonuniform_witness()));

  Rng rng(5);
  int uniform_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_layered(rng, 5, 4);
    bool u = is_uniform(g).uniform;
    uniform_seen += u;
    CHECK(u == is_uniform_downup(g));
    CHECK(u == uniform_by_paths(g));
  }
  CHECK(uniform_seen > 0);
  CHECK(uniform_seen < 300);
}

TEST_CASE("non-nesting") {
  CHECK(is_non_nesting(build_boolean(3)).non_nesting);
  CHECK(is_non_nesting(build_boolean(4)).non_nesting);
  CHECK(is_non_nesting(build_subspace_lattice(2, 3)).non_nesting);
  auto g = LayeredGraph::build({1, 3, 2},
                               {{{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}, {{1, 2}, {0, 0}}, {{2, 0}, {1, 0}},
                                {{2, 0}, {1, 1}}, {{2, 1}, {1, 0}}, {{2, 1}, {1, 1}}, {{2, 1}, {1, 2}}},
                               {true, true});
  auto r = is_non_nesting(g);
  CHECK_FALSE(r.non_nesting);
  REQUIRE(r.witness);
  CHECK(r.witness->first == VertexId{2, 0});
  CHECK(r.witness->second == VertexId{2, 1});
}

TEST_CASE("atomic lattices") {
  CHECK(is_atomic_lattice(build_boolean(3)));
  CHECK(is_atomic_lattice(build_subspace_lattice(2, 3)));
  auto tree = LayeredGraph::build({1, 2}, {{{1, 0}, {0, 0}}, {{1, 1}, {0, 0}}}, {true, true});
  CHECK_FALSE(is_atomic_lattice(tree));
  // a lattice that is not atomic: chain of length 2 on top of a single atom
  CHECK_FALSE(is_atomic_lattice(build_complete_layered({1, 1, 1})));
  CHECK(is_atomic_lattice(build_complete_layered({1, 1})));
}

TEST_CASE("isomorphism search") {
  Rng rng(3);
  for (const auto& g : {build_boolean(3), build_boolean(4), build_subspace_lattice(2, 3),
                        build_complete_layered({1, 3, 2})}) {
    auto h = permuted(g, rng);
    auto map = are_isomorphic(g, h);
    REQUIRE(map);
    CHECK(is_isomorphism(g, h, *map));
  }
  CHECK_FALSE(are_isomorphic(build_boolean(3), build_complete_layered({1, 3, 3, 1})));
  for (int trial = 0; trial < 50; ++trial) {
    auto g = testing::random_layered(rng, 4, 4);
    auto h = permuted(g, rng);
    auto map = are_isomorphic(g, h);
    REQUIRE(map);
    CHECK(is_isomorphism(g, h, *map));
    // dropping one edge breaks it
    auto edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(testing::pick(rng, edges.size())));
    auto smaller = LayeredGraph::build(h.levels(), edges);
    CHECK_FALSE(are_isomorphic(g, smaller));
  }
}

TEST_CASE("json and dot") {
  for (const auto& g : {build_boolean(3), build_subspace_lattice(3, 2), nonuniform_witness()}) {
    auto j = graph_to_json(g);
    auto back = graph_from_json(j);
    CHECK(back == g);
    CHECK(graph_to_json(back).dump() == j.dump());
  }
  auto dot = graph_to_dot(build_boolean(2));
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("v2_0 -> v1_0") != std::string::npos);
  CHECK(kind_of([] { graph_from_json(nlohmann::json::parse(R"({"levels":[1,1],"edges":[[[1,0],[1,0]]]})")); }) ==
        ErrorKind::EdgeLevelMismatch);
  CHECK(kind_of([] { graph_from_json(nlohmann::json::parse(R"({"edges":[]})")); }) == ErrorKind::InvalidArgument);
}
