#include "laga/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "laga/error.hpp"
#include "laga/union_find.hpp"

namespace laga {

namespace {

std::vector<std::size_t> source_indices(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T) {
  if (level == 0 || level > g.top_level())
    throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(level) + " has no level below it in the graph");
  std::vector<std::size_t> out;
  for (const auto& t : T) {
    if (t.level != level)
      throw Error(ErrorKind::MixedLevels, "vertex " + to_string(t) + " is not on level " + std::to_string(level));
    if (!g.contains(t)) throw Error(ErrorKind::InvalidArgument, "vertex " + to_string(t) + " is out of range");
    out.push_back(t.index);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<VertexId> successors(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T) {
  auto source = source_indices(g, level, T);
  std::vector<bool> hit(g.level_size(level - 1), false);
  for (auto t : source)
    for (auto s : g.successors({level, t})) hit[s] = true;
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (hit[i]) out.push_back({level - 1, i});
  return out;
}

ClassPartition class_partition(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T) {
  ClassPartition out;
  out.ground_level = level - 1;
  out.source = source_indices(g, level, T);
  std::size_t ground = g.level_size(level - 1);
  DisjointSets sets(ground);
  std::vector<bool> hit(ground, false);
  for (auto t : out.source) {
    const auto& succ = g.successors({level, t});
    for (auto s : succ) {
      hit[s] = true;
      sets.unite(succ.front(), s);
    }
  }
  out.classes = sets.classes();
  out.class_of.assign(ground, 0);
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (auto x : out.classes[c]) out.class_of[x] = c;
    if (hit[out.classes[c].front()]) ++out.touching;
  }
  return out;
}

IdentityReport check_identities(const LayeredGraph& g, std::size_t level, const std::vector<VertexId>& T) {
  IdentityReport r;
  r.ground_size = g.level_size(level - 1);
  r.k_empty = class_partition(g, level, {}).k();
  auto part = class_partition(g, level, T);
  r.k = part.k();
  r.k_touching = part.k_touching();
  r.successor_count = successors(g, level, T).size();
  r.uncovered = r.ground_size - r.successor_count;
  if (r.ground_size != r.k_empty) throw std::logic_error("identity |V| = k_empty failed");
  if (r.uncovered != r.k - r.k_touching) throw std::logic_error("identity uncovered = k - k_touching failed");
  if (r.successor_count != r.k_empty - r.k + r.k_touching)
    throw std::logic_error("identity |S(T)| = k_empty - k + k_touching failed");
  return r;
}

UniformityReport is_uniform(const LayeredGraph& g) {
  UniformityReport report;
  for (std::size_t l = 2; l < g.num_levels(); ++l)
    for (std::size_t v = 0; v < g.level_size(l); ++v) {
      const auto& succ = g.successors({l, v});
      DisjointSets sets(succ.size());
      // link successors through each shared successor one level further down
      std::vector<std::size_t> first_owner(g.level_size(l - 2), SIZE_MAX);
      for (std::size_t a = 0; a < succ.size(); ++a)
        for (auto y : g.successors({l - 1, succ[a]})) {
          if (first_owner[y] == SIZE_MAX)
            first_owner[y] = a;
          else
            sets.unite(first_owner[y], a);
        }
      if (sets.count() > 1) {
        report.uniform = false;
        report.witness = VertexId{l, v};
        for (const auto& cls : sets.classes()) {
          std::vector<std::size_t> members;
          for (auto a : cls) members.push_back(succ[a]);
          report.split_classes.push_back(std::move(members));
        }
        return report;
      }
    }
  return report;
}

bool is_uniform_downup(const LayeredGraph& g) {
  for (std::size_t l = 2; l < g.num_levels(); ++l)
    for (std::size_t v = 0; v < g.level_size(l); ++v) {
      const auto& succ = g.successors({l, v});
      if (succ.empty()) continue;
      std::vector<bool> below_v(g.level_size(l - 1), false);
      for (auto x : succ) below_v[x] = true;
      std::vector<bool> seen(g.level_size(l - 1), false);
      std::deque<std::size_t> queue{succ.front()};
      seen[succ.front()] = true;
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto y : g.successors({l - 1, x}))
          for (auto x2 : g.predecessors({l - 2, y}))
            if (below_v[x2] && !seen[x2]) {
              seen[x2] = true;
              queue.push_back(x2);
            }
      }
      for (auto x : succ)
        if (!seen[x]) return false;
    }
  return true;
}

NestingReport is_non_nesting(const LayeredGraph& g) {
  NestingReport report;
  for (std::size_t l = 1; l < g.num_levels(); ++l)
    for (std::size_t p = 0; p < g.level_size(l); ++p) {
      const auto& sp = g.successors({l, p});
      if (sp.size() <= 1) continue;
      for (std::size_t q = 0; q < g.level_size(l); ++q) {
        if (q == p) continue;
        const auto& sq = g.successors({l, q});
        if (std::includes(sq.begin(), sq.end(), sp.begin(), sp.end())) {
          report.non_nesting = false;
          report.witness = std::make_pair(VertexId{l, p}, VertexId{l, q});
          return report;
        }
      }
    }
  return report;
}

bool is_atomic_lattice(const LayeredGraph& g) {
  auto verts = g.vertices();
  const std::size_t n = verts.size();
  std::vector<std::size_t> offset(g.num_levels(), 0);
  for (std::size_t l = 1; l < g.num_levels(); ++l) offset[l] = offset[l - 1] + g.level_size(l - 1);
  auto id = [&](VertexId v) { return offset[v.level] + v.index; };
  // below[y][x]: x <= y
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (const auto& v : verts) {
    auto& row = below[id(v)];
    row[id(v)] = true;
    if (v.level == 0) continue;
    for (auto s : g.successors(v)) {
      const auto& sub = below[id({v.level - 1, s})];
      for (std::size_t x = 0; x < n; ++x)
        if (sub[x]) row[x] = true;
    }
  }
  auto least_of = [&](const std::vector<std::size_t>& set) -> std::optional<std::size_t> {
    for (auto c : set)
      if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return below[o][c]; })) return c;
    return std::nullopt;
  };
  auto greatest_of = [&](const std::vector<std::size_t>& set) -> std::optional<std::size_t> {
    for (auto c : set)
      if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return below[c][o]; })) return c;
    return std::nullopt;
  };
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<std::size_t> upper, lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (below[c][a] && below[c][b]) upper.push_back(c);
        if (below[a][c] && below[b][c]) lower.push_back(c);
      }
      auto j = least_of(upper);
      if (!j || !greatest_of(lower)) return false;
      join[a][b] = join[b][a] = *j;
    }
  if (n == 0) return false;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  auto least = least_of(all);
  if (!least) return false;
  std::size_t bottom = *least;
  std::vector<std::size_t> atoms;
  for (std::size_t c = 0; c < n; ++c) {
    if (c == bottom) continue;
    bool is_atom = true;
    for (std::size_t x = 0; x < n; ++x)
      if (x != c && x != bottom && below[c][x]) is_atom = false;
    if (is_atom) atoms.push_back(c);
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t acc = bottom;
    for (auto a : atoms)
      if (below[x][a]) acc = join[acc][a];
    if (acc != x) return false;
  }
  return true;
}

}  // namespace laga
