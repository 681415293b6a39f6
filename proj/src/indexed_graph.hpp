#pragma once

#include <map>
#include <vector>

#include "edgerank/multigraph.hpp"

namespace edgerank::detail {

// Index-based view of a Graph for the solvers; node/edge indices follow
// lexicographic label order.
struct IndexedGraph {
    std::vector<NodeId> node_ids;
    std::vector<EdgeId> edge_ids;
    std::vector<double> node_weight;
    std::vector<int> from, to;                // per edge
    std::vector<std::vector<int>> in_edges;   // per node, edge indices
    std::vector<std::vector<int>> out_edges;  // per node, edge indices
    std::map<NodeId, int> node_index;
    std::map<EdgeId, int> edge_index;

    explicit IndexedGraph(const Graph& g) {
        node_ids.reserve(g.nodes.size());
        for (const auto& [v, w] : g.nodes) {
            node_index.emplace(v, static_cast<int>(node_ids.size()));
            node_ids.push_back(v);
            node_weight.push_back(w);
        }
        in_edges.resize(node_ids.size());
        out_edges.resize(node_ids.size());
        for (const auto& [e, ep] : g.edges) {
            int idx = static_cast<int>(edge_ids.size());
            edge_index.emplace(e, idx);
            edge_ids.push_back(e);
            int f = node_index.at(ep.from);
            int t = node_index.at(ep.to);
            from.push_back(f);
            to.push_back(t);
            out_edges[f].push_back(idx);
            in_edges[t].push_back(idx);
        }
    }

    int n() const { return static_cast<int>(node_ids.size()); }
    int m() const { return static_cast<int>(edge_ids.size()); }
    int out_degree(int v) const { return static_cast<int>(out_edges[v].size()); }
};

}  // namespace edgerank::detail
