#include "rqwl/json_io.hpp"

#include <fstream>
#include <iostream>

namespace rqwl {

nlohmann::json graph_to_json(const ColoredGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}, {"colors", g.colors()}};
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) throw DomainError("graph JSON needs key 'n'");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw DomainError("edges must be 2-arrays");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    }
    std::vector<ColorId> colors(std::max(n, 0), 0);
    if (j.contains("colors")) colors = j.at("colors").get<std::vector<ColorId>>();
    return ColoredGraph::make(n, edges, colors);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed graph JSON: ") + e.what());
  }
}

ColoredGraph read_graph(const std::string& path) {
  nlohmann::json j;
  try {
    if (path == "-") {
      j = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw DomainError("cannot open '" + path + "'");
      j = nlohmann::json::parse(in);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

nlohmann::json provenance_to_json(const CfiGraph& g) {
  nlohmann::json out = nlohmann::json::object();
  for (size_t v = 0; v < g.tags.size(); ++v) {
    out[std::to_string(v)] = {g.tags[v].base, g.tags[v].bits};
  }
  return out;
}

}  // namespace rqwl
