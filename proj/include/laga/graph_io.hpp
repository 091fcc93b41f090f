#pragma once

#include <string>

#include <json.hpp>

#include "laga/graph.hpp"

namespace laga {

nlohmann::json graph_to_json(const LayeredGraph& g);
/// Validates through LayeredGraph::build.
LayeredGraph graph_from_json(const nlohmann::json& j);
/// Graphviz digraph with one rank per level, top level first.
std::string graph_to_dot(const LayeredGraph& g);

}  // namespace laga
