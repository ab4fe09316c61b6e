#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rqwl/cfi.hpp"
#include "rqwl/graph.hpp"

namespace rqwl {

/// {"n": int, "edges": [[u, v], ...], "colors": [c, ...]}
nlohmann::json graph_to_json(const ColoredGraph& g);
/// Throws DomainError on malformed input.
ColoredGraph graph_from_json(const nlohmann::json& j);

/// Reads a graph from a file path, or from stdin when path is "-".
ColoredGraph read_graph(const std::string& path);

/// {"cfi vertex": [base vertex, [bits...]], ...} keyed by decimal vertex id.
nlohmann::json provenance_to_json(const CfiGraph& g);

}  // namespace rqwl
