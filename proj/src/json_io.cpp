#include "edgerank/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace edgerank {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known |= it.key() == k;
        if (!known) throw GraphError("unknown field '" + it.key() + "' in " + where);
    }
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw GraphError("missing or non-string field '" + std::string(key) + "' in " + where);
    return obj[key].get<std::string>();
}

}  // namespace

Graph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw GraphError("graph document must be a JSON object");
    reject_unknown_fields(doc, {"nodes", "edges"}, "graph document");
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw GraphError("graph document needs a 'nodes' array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw GraphError("graph document needs an 'edges' array");

    Graph g;
    for (const json& n : doc["nodes"]) {
        if (!n.is_object()) throw GraphError("node entries must be objects");
        reject_unknown_fields(n, {"id", "weight"}, "node entry");
        std::string id = require_string(n, "id", "node entry");
        if (!n.contains("weight") || !n["weight"].is_number())
            throw GraphError("missing or non-numeric 'weight' for node " + id);
        double w = n["weight"].get<double>();
        if (!g.nodes.emplace(id, w).second) throw GraphError("duplicate node id: " + id);
    }
    for (const json& e : doc["edges"]) {
        if (!e.is_object()) throw GraphError("edge entries must be objects");
        reject_unknown_fields(e, {"id", "from", "to"}, "edge entry");
        std::string id = require_string(e, "id", "edge entry");
        Endpoints ep{require_string(e, "from", "edge " + id),
                     require_string(e, "to", "edge " + id)};
        if (!g.edges.emplace(id, ep).second) throw GraphError("duplicate edge id: " + id);
    }
    return g;
}

json graph_to_json(const Graph& g) {
    json nodes = json::array();
    for (const auto& [v, w] : g.nodes) nodes.push_back({{"id", v}, {"weight", w}});
    json edges = json::array();
    for (const auto& [e, ep] : g.edges)
        edges.push_back({{"id", e}, {"from", ep.from}, {"to", ep.to}});
    return json{{"nodes", nodes}, {"edges", edges}};
}

Graph load_graph(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        throw GraphError(std::string("invalid JSON: ") + ex.what());
    }
    Graph g = graph_from_json(doc);
    if (auto bad = validate(g))
        throw GraphError("invariant '" + bad->invariant + "' violated by " + bad->label +
                         " (" + bad->detail + ")");
    return g;
}

Graph load_graph_file(const std::string& path) {
    if (path == "-") return load_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open file: " + path);
    return load_graph(in);
}

}  // namespace edgerank
