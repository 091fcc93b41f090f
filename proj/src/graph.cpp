#include "laga/graph.hpp"

#include <algorithm>

#include "laga/error.hpp"

namespace laga {

std::string to_string(VertexId v) { return "(" + std::to_string(v.level) + "," + std::to_string(v.index) + ")"; }

LayeredGraph LayeredGraph::build(std::vector<std::size_t> levels, const std::vector<Edge>& edges, GraphFlags flags,
                                 std::map<VertexId, std::string> labels) {
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "a layered graph needs at least one level");
  LayeredGraph g;
  g.levels_ = std::move(levels);
  g.flags_ = flags;
  g.down_.resize(g.levels_.size());
  g.up_.resize(g.levels_.size());
  for (std::size_t l = 0; l < g.levels_.size(); ++l) {
    g.down_[l].resize(g.levels_[l]);
    g.up_[l].resize(g.levels_[l]);
  }
  for (const auto& [tail, head] : edges) {
    if (!g.contains(tail) || !g.contains(head))
      throw Error(ErrorKind::InvalidArgument, "edge " + to_string(tail) + "->" + to_string(head) + " is out of range");
    if (head.level + 1 != tail.level)
      throw Error(ErrorKind::EdgeLevelMismatch,
                  "edge " + to_string(tail) + "->" + to_string(head) + " does not drop exactly one level");
    g.down_[tail.level][tail.index].push_back(head.index);
    g.up_[head.level][head.index].push_back(tail.index);
  }
  for (auto& level : g.down_)
    for (auto& adj : level) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  for (auto& level : g.up_)
    for (auto& adj : level) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  if (flags.unique_minimal && g.levels_[0] != 1)
    throw Error(ErrorKind::MultipleMinimal, "level 0 has " + std::to_string(g.levels_[0]) + " vertices");
  if (flags.positive_outdegree)
    for (std::size_t l = 1; l < g.levels_.size(); ++l)
      for (std::size_t i = 0; i < g.levels_[l]; ++i)
        if (g.down_[l][i].empty())
          throw Error(ErrorKind::EmptySuccessor, "vertex " + to_string({l, i}) + " covers nothing");
  for (const auto& [v, text] : labels)
    if (!g.contains(v)) throw Error(ErrorKind::InvalidArgument, "label for missing vertex " + to_string(v));
  g.labels_ = std::move(labels);
  return g;
}

std::size_t LayeredGraph::vertex_count() const {
  std::size_t n = 0;
  for (auto s : levels_) n += s;
  return n;
}

std::vector<VertexId> LayeredGraph::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t l = 0; l < levels_.size(); ++l)
    for (std::size_t i = 0; i < levels_[l]; ++i) out.push_back({l, i});
  return out;
}

bool LayeredGraph::has_edge(VertexId tail, VertexId head) const {
  if (!contains(tail) || !contains(head) || head.level + 1 != tail.level) return false;
  const auto& adj = successors(tail);
  return std::binary_search(adj.begin(), adj.end(), head.index);
}

std::vector<Edge> LayeredGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t l = 1; l < levels_.size(); ++l)
    for (std::size_t i = 0; i < levels_[l]; ++i)
      for (auto j : down_[l][i]) out.push_back({{l, i}, {l - 1, j}});
  return out;
}

std::size_t LayeredGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& level : down_)
    for (const auto& adj : level) n += adj.size();
  return n;
}

std::string LayeredGraph::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it != labels_.end()) return it->second;
  return std::to_string(v.level) + "," + std::to_string(v.index);
}

bool operator==(const LayeredGraph& a, const LayeredGraph& b) {
  return a.levels_ == b.levels_ && a.down_ == b.down_ && a.flags_ == b.flags_ && a.labels_ == b.labels_;
}

LayeredGraph restrict(const LayeredGraph& g, std::size_t level) {
  if (level > g.top_level()) throw Error(ErrorKind::InvalidArgument, "restriction above the top level");
  std::vector<std::size_t> levels(g.levels().begin(), g.levels().begin() + static_cast<std::ptrdiff_t>(level + 1));
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.first.level <= level) edges.push_back(e);
  std::map<VertexId, std::string> labels;
  for (const auto& [v, text] : g.labels())
    if (v.level <= level) labels.emplace(v, text);
  return LayeredGraph::build(std::move(levels), edges, g.flags(), std::move(labels));
}

LayeredGraph upper_part(const LayeredGraph& g, std::size_t from) {
  if (from > g.top_level()) throw Error(ErrorKind::InvalidArgument, "upper part above the top level");
  std::vector<std::size_t> levels(g.levels().begin() + static_cast<std::ptrdiff_t>(from), g.levels().end());
  std::vector<Edge> edges;
  for (const auto& [tail, head] : g.edges())
    if (head.level >= from) edges.push_back({{tail.level - from, tail.index}, {head.level - from, head.index}});
  std::map<VertexId, std::string> labels;
  for (const auto& [v, text] : g.labels())
    if (v.level >= from) labels.emplace(VertexId{v.level - from, v.index}, text);
  GraphFlags flags{levels[0] == 1, g.flags().positive_outdegree};
  return LayeredGraph::build(std::move(levels), edges, flags, std::move(labels));
}

}  // namespace laga
