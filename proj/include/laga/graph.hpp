#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace laga {

struct VertexId {
  std::size_t level = 0;
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(VertexId v);

/// (tail, head); the head sits one level below the tail.
using Edge = std::pair<VertexId, VertexId>;

struct GraphFlags {
  bool unique_minimal = false;
  bool positive_outdegree = false;
  friend bool operator==(const GraphFlags&, const GraphFlags&) = default;
};

/// Immutable layered graph. Adjacency lists hold vertex indices on the
/// neighbouring level and are sorted.
class LayeredGraph {
 public:
  /// Validates and normalizes; duplicate edges collapse to one.
  static LayeredGraph build(std::vector<std::size_t> levels, const std::vector<Edge>& edges, GraphFlags flags = {},
                            std::map<VertexId, std::string> labels = {});

  std::size_t num_levels() const noexcept { return levels_.size(); }
  std::size_t top_level() const noexcept { return levels_.size() - 1; }
  const std::vector<std::size_t>& levels() const noexcept { return levels_; }
  std::size_t level_size(std::size_t level) const { return level < levels_.size() ? levels_[level] : 0; }
  std::size_t vertex_count() const;
  bool contains(VertexId v) const { return v.level < levels_.size() && v.index < levels_[v.level]; }
  std::vector<VertexId> vertices() const;

  /// Indices (on level v.level - 1) of the vertices covered by v.
  const std::vector<std::size_t>& successors(VertexId v) const { return down_.at(v.level).at(v.index); }
  /// Indices (on level v.level + 1) of the vertices covering v.
  const std::vector<std::size_t>& predecessors(VertexId v) const { return up_.at(v.level).at(v.index); }
  std::size_t out_degree(VertexId v) const { return successors(v).size(); }
  std::size_t in_degree(VertexId v) const { return predecessors(v).size(); }
  bool has_edge(VertexId tail, VertexId head) const;
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  const GraphFlags& flags() const noexcept { return flags_; }
  const std::map<VertexId, std::string>& labels() const noexcept { return labels_; }
  /// The stored label, or "level,index".
  std::string label(VertexId v) const;

  friend bool operator==(const LayeredGraph& a, const LayeredGraph& b);

 private:
  LayeredGraph() = default;
  std::vector<std::size_t> levels_;
  std::vector<std::vector<std::vector<std::size_t>>> down_;
  std::vector<std::vector<std::vector<std::size_t>>> up_;
  GraphFlags flags_;
  std::map<VertexId, std::string> labels_;
};

/// Keeps levels 0..level.
LayeredGraph restrict(const LayeredGraph& g, std::size_t level);
/// Keeps levels from..top, renumbered so that `from` becomes level 0.
LayeredGraph upper_part(const LayeredGraph& g, std::size_t from);

}  // namespace laga
