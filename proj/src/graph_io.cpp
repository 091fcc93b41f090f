#include "laga/graph_io.hpp"

#include <sstream>

#include "laga/error.hpp"

namespace laga {

nlohmann::json graph_to_json(const LayeredGraph& g) {
  nlohmann::json j;
  j["levels"] = g.levels();
  auto edges = nlohmann::json::array();
  for (const auto& [tail, head] : g.edges())
    edges.push_back({{tail.level, tail.index}, {head.level, head.index}});
  j["edges"] = std::move(edges);
  j["flags"] = {{"unique_minimal", g.flags().unique_minimal}, {"positive_outdegree", g.flags().positive_outdegree}};
  auto labels = nlohmann::json::object();
  for (const auto& [v, text] : g.labels()) labels[std::to_string(v.level) + "," + std::to_string(v.index)] = text;
  j["labels"] = std::move(labels);
  return j;
}

LayeredGraph graph_from_json(const nlohmann::json& j) {
  try {
    auto levels = j.at("levels").get<std::vector<std::size_t>>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (e.size() != 2 || e[0].size() != 2 || e[1].size() != 2)
        throw Error(ErrorKind::InvalidArgument, "edge entries must look like [[l,i],[l-1,j]]");
      edges.push_back({{e[0][0].get<std::size_t>(), e[0][1].get<std::size_t>()},
                       {e[1][0].get<std::size_t>(), e[1][1].get<std::size_t>()}});
    }
    GraphFlags flags;
    if (j.contains("flags")) {
      flags.unique_minimal = j["flags"].value("unique_minimal", false);
      flags.positive_outdegree = j["flags"].value("positive_outdegree", false);
    }
    std::map<VertexId, std::string> labels;
    if (j.contains("labels"))
      for (const auto& [key, text] : j["labels"].items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "label key '" + key + "' is not l,i");
        labels[{std::stoul(key.substr(0, comma)), std::stoul(key.substr(comma + 1))}] = text.get<std::string>();
      }
    return LayeredGraph::build(std::move(levels), edges, flags, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed graph JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed graph JSON: ") + e.what());
  }
}

std::string graph_to_dot(const LayeredGraph& g) {
  std::ostringstream out;
  auto node = [](VertexId v) { return "v" + std::to_string(v.level) + "_" + std::to_string(v.index); };
  out << "digraph layered {\n  rankdir=TB;\n";
  for (std::size_t l = g.num_levels(); l-- > 0;) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < g.level_size(l); ++i) out << ' ' << node({l, i}) << ';';
    out << " }\n";
  }
  for (const auto& v : g.vertices()) {
    std::string text = g.label(v);
    std::string escaped;
    for (char c : text) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  " << node(v) << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [tail, head] : g.edges()) out << "  " << node(tail) << " -> " << node(head) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace laga
