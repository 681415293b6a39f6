#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "edgerank/multigraph.hpp"

namespace edgerank {

/// The one persistence/wire representation used everywhere:
///   {"nodes":[{"id":"v1","weight":1.0},...],
///    "edges":[{"id":"e1","from":"v1","to":"v2"},...]}
/// Unknown fields are rejected.
Graph graph_from_json(const nlohmann::json& doc);

nlohmann::json graph_to_json(const Graph& g);

/// Parses and validates; throws GraphError on malformed documents or
/// invariant violations.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace edgerank
