#include "laga/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace laga {

namespace {

using Colors = std::vector<std::vector<std::size_t>>;

// Joint colour refinement of both graphs so that colour numbers agree.
std::pair<Colors, Colors> refine(const LayeredGraph& g1, const LayeredGraph& g2) {
  const LayeredGraph* graphs[2] = {&g1, &g2};
  Colors colors[2];
  for (int k = 0; k < 2; ++k) {
    const auto& g = *graphs[k];
    colors[k].resize(g.num_levels());
    for (std::size_t l = 0; l < g.num_levels(); ++l) colors[k][l].assign(g.level_size(l), 0);
  }
  std::size_t distinct = 0;
  while (true) {
    using Signature = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::vector<std::vector<Signature>>> sigs(2);
    for (int k = 0; k < 2; ++k) {
      const auto& g = *graphs[k];
      sigs[k].resize(g.num_levels());
      for (std::size_t l = 0; l < g.num_levels(); ++l)
        for (std::size_t i = 0; i < g.level_size(l); ++i) {
          std::vector<std::size_t> down, up;
          if (l > 0)
            for (auto s : g.successors({l, i})) down.push_back(colors[k][l - 1][s]);
          if (l + 1 < g.num_levels())
            for (auto p : g.predecessors({l, i})) up.push_back(colors[k][l + 1][p]);
          std::sort(down.begin(), down.end());
          std::sort(up.begin(), up.end());
          Signature sig{l, colors[k][l][i], std::move(down), std::move(up)};
          ids.emplace(sig, 0);
          sigs[k][l].push_back(std::move(sig));
        }
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < sigs[k].size(); ++l)
        for (std::size_t i = 0; i < sigs[k][l].size(); ++i) colors[k][l][i] = ids[sigs[k][l][i]];
    if (next == distinct) break;
    distinct = next;
  }
  return {colors[0], colors[1]};
}

class Search {
 public:
  Search(const LayeredGraph& g1, const LayeredGraph& g2, Colors c1, Colors c2)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)) {
    for (std::size_t l = 0; l < g1.num_levels(); ++l) {
      map_.emplace_back(g1.level_size(l), kUnset);
      used_.emplace_back(g2.level_size(l), false);
    }
  }

  bool run() { return extend(0, g1_.vertex_count()); }
  VertexMap result() const { return map_; }

 private:
  static constexpr std::size_t kUnset = SIZE_MAX;

  std::size_t mapped_neighbours(VertexId v) const {
    std::size_t n = 0;
    if (v.level > 0)
      for (auto s : g1_.successors(v)) n += map_[v.level - 1][s] != kUnset;
    if (v.level + 1 < g1_.num_levels())
      for (auto p : g1_.predecessors(v)) n += map_[v.level + 1][p] != kUnset;
    return n;
  }

  std::size_t used_neighbours(VertexId w) const {
    std::size_t n = 0;
    if (w.level > 0)
      for (auto s : g2_.successors(w)) n += used_[w.level - 1][s];
    if (w.level + 1 < g2_.num_levels())
      for (auto p : g2_.predecessors(w)) n += used_[w.level + 1][p];
    return n;
  }

  VertexId pick() const {
    VertexId best{};
    std::size_t best_score = 0;
    bool found = false;
    for (std::size_t l = 0; l < g1_.num_levels(); ++l)
      for (std::size_t i = 0; i < g1_.level_size(l); ++i) {
        if (map_[l][i] != kUnset) continue;
        std::size_t score = mapped_neighbours({l, i});
        if (!found || score > best_score) {
          best = {l, i};
          best_score = score;
          found = true;
        }
      }
    return best;
  }

  bool consistent(VertexId v, VertexId w) const {
    if (v.level > 0)
      for (auto s : g1_.successors(v)) {
        auto m = map_[v.level - 1][s];
        if (m != kUnset && !g2_.has_edge(w, {v.level - 1, m})) return false;
      }
    if (v.level + 1 < g1_.num_levels())
      for (auto p : g1_.predecessors(v)) {
        auto m = map_[v.level + 1][p];
        if (m != kUnset && !g2_.has_edge({v.level + 1, m}, w)) return false;
      }
    return mapped_neighbours(v) == used_neighbours(w);
  }

  bool extend(std::size_t done, std::size_t total) {
    if (done == total) return true;
    VertexId v = pick();
    for (std::size_t j = 0; j < g2_.level_size(v.level); ++j) {
      if (used_[v.level][j] || c2_[v.level][j] != c1_[v.level][v.index]) continue;
      VertexId w{v.level, j};
      if (!consistent(v, w)) continue;
      map_[v.level][v.index] = j;
      used_[v.level][j] = true;
      if (extend(done + 1, total)) return true;
      map_[v.level][v.index] = kUnset;
      used_[v.level][j] = false;
    }
    return false;
  }

  const LayeredGraph& g1_;
  const LayeredGraph& g2_;
  Colors c1_, c2_;
  VertexMap map_;
  std::vector<std::vector<bool>> used_;
};

}  // namespace

bool is_isomorphism(const LayeredGraph& g1, const LayeredGraph& g2, const VertexMap& map) {
  if (g1.levels() != g2.levels() || g1.edge_count() != g2.edge_count() || map.size() != g1.num_levels()) return false;
  for (std::size_t l = 0; l < map.size(); ++l) {
    if (map[l].size() != g1.level_size(l)) return false;
    std::vector<bool> hit(g2.level_size(l), false);
    for (auto j : map[l]) {
      if (j >= hit.size() || hit[j]) return false;
      hit[j] = true;
    }
  }
  for (const auto& [tail, head] : g1.edges())
    if (!g2.has_edge({tail.level, map[tail.level][tail.index]}, {head.level, map[head.level][head.index]}))
      return false;
  return true;
}

std::optional<VertexMap> are_isomorphic(const LayeredGraph& g1, const LayeredGraph& g2) {
  if (g1.levels() != g2.levels() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto [c1, c2] = refine(g1, g2);
  for (std::size_t l = 0; l < g1.num_levels(); ++l) {
    auto a = c1[l], b = c2[l];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  Search search(g1, g2, std::move(c1), std::move(c2));
  if (!search.run()) return std::nullopt;
  auto map = search.result();
  if (!is_isomorphism(g1, g2, map)) return std::nullopt;
  return map;
}

}  // namespace laga
