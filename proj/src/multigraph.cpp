#include "edgerank/multigraph.hpp"

#include <algorithm>
#include <deque>

namespace edgerank {

double Graph::weight(const NodeId& v) const {
    auto it = nodes.find(v);
    if (it == nodes.end()) throw GraphError("unknown node: " + v);
    return it->second;
}

const Endpoints& Graph::endpoints(const EdgeId& e) const {
    auto it = edges.find(e);
    if (it == edges.end()) throw GraphError("unknown edge: " + e);
    return it->second;
}

Graph make_graph(std::vector<std::pair<NodeId, double>> nodes,
                 std::vector<std::pair<EdgeId, Endpoints>> edges) {
    Graph g;
    for (auto& [v, w] : nodes) {
        if (!g.nodes.emplace(v, w).second) throw GraphError("duplicate node label: " + v);
    }
    for (auto& [e, ep] : edges) {
        if (!g.edges.emplace(e, ep).second) throw GraphError("duplicate edge label: " + e);
    }
    return g;
}

std::optional<Violation> validate(const Graph& g) {
    for (const auto& [e, ep] : g.edges) {
        if (!g.has_node(ep.from))
            return Violation{"edge endpoint names an existing node", e,
                             "dangling 'from' endpoint " + ep.from};
        if (!g.has_node(ep.to))
            return Violation{"edge endpoint names an existing node", e,
                             "dangling 'to' endpoint " + ep.to};
    }
    for (const auto& [v, w] : g.nodes) {
        if (!(w >= 0.0))
            return Violation{"node weights are non-negative", v,
                             "weight " + std::to_string(w)};
    }
    return std::nullopt;
}

std::set<EdgeId> incident_edges(const Graph& g, const NodeId& v, Direction dir) {
    if (!g.has_node(v)) throw GraphError("unknown node: " + v);
    std::set<EdgeId> out;
    for (const auto& [e, ep] : g.edges) {
        bool hit = false;
        if (dir == Direction::In || dir == Direction::Both) hit |= ep.to == v;
        if (dir == Direction::Out || dir == Direction::Both) hit |= ep.from == v;
        if (hit) out.insert(e);
    }
    return out;
}

int in_degree(const Graph& g, const NodeId& v) {
    return static_cast<int>(incident_edges(g, v, Direction::In).size());
}

int out_degree(const Graph& g, const NodeId& v) {
    return static_cast<int>(incident_edges(g, v, Direction::Out).size());
}

std::set<NodeId> successors(const Graph& g, const NodeId& u) {
    if (!g.has_node(u)) throw GraphError("unknown node: " + u);
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [e, ep] : g.edges) adj[ep.from].push_back(ep.to);

    std::set<NodeId> reached;
    std::deque<NodeId> queue;
    for (const NodeId& v : adj[u]) {
        if (reached.insert(v).second) queue.push_back(v);
    }
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (const NodeId& w : adj[v]) {
            if (reached.insert(w).second) queue.push_back(w);
        }
    }
    return reached;
}

NodeRole classify_node(const Graph& g, const NodeId& v) {
    if (!g.has_node(v)) throw GraphError("unknown node: " + v);
    bool has_out = false, has_in = false;
    for (const auto& [e, ep] : g.edges) {
        has_out |= ep.from == v;
        has_in |= ep.to == v;
    }
    if (!has_out && !has_in) return NodeRole::Isolated;
    if (!has_out) return NodeRole::Sink;
    return NodeRole::Ordinary;
}

EdgeRole classify_edge(const Graph& g, const EdgeId& e) {
    const Endpoints& ep = g.endpoints(e);
    // source edge: start has no incoming edges and e is its only outgoing one
    if (in_degree(g, ep.from) != 0) return EdgeRole::Ordinary;
    if (incident_edges(g, ep.from, Direction::Out) != std::set<EdgeId>{e})
        return EdgeRole::Ordinary;
    if (incident_edges(g, ep.to, Direction::Both) == std::set<EdgeId>{e})
        return EdgeRole::IsolatedEdge;
    return EdgeRole::SourceEdge;
}

std::optional<OutTwinWitness> out_twin_witness(const Graph& g,
                                               const NodeId& u,
                                               const NodeId& w) {
    if (u == w) throw GraphError("out-twin witness requires two distinct nodes");
    if (!g.has_node(u)) throw GraphError("unknown node: " + u);
    if (!g.has_node(w)) throw GraphError("unknown node: " + w);

    // bucket out-edges by end node; map order gives the canonical pairing
    std::map<NodeId, std::vector<EdgeId>> by_end_u, by_end_w;
    for (const auto& [e, ep] : g.edges) {
        if (ep.from == u) by_end_u[ep.to].push_back(e);
        if (ep.from == w) by_end_w[ep.to].push_back(e);
    }
    if (by_end_u.size() != by_end_w.size()) return std::nullopt;

    OutTwinWitness witness;
    for (auto& [end, eu] : by_end_u) {
        auto it = by_end_w.find(end);
        if (it == by_end_w.end() || it->second.size() != eu.size()) return std::nullopt;
        for (size_t i = 0; i < eu.size(); ++i)
            witness.pairs.emplace_back(eu[i], it->second[i]);
    }
    return witness;
}

Graph graph_sum(const Graph& g, const Graph& h) {
    Graph out = g;
    for (const auto& [v, w] : h.nodes) {
        if (!out.nodes.emplace(v, w).second)
            throw GraphError("node label collision in graph sum: " + v);
    }
    for (const auto& [e, ep] : h.edges) {
        if (!out.edges.emplace(e, ep).second)
            throw GraphError("edge label collision in graph sum: " + e);
    }
    return out;
}

Graph redirect(const Graph& g, const NodeId& u, const NodeId& v) {
    if (u == v) throw GraphError("cannot redirect a node into itself: " + u);
    double bu = g.weight(u);
    double bv = g.weight(v);

    Graph out;
    out.nodes = g.nodes;
    out.nodes.erase(u);
    out.nodes[v] = bu + bv;
    for (const auto& [e, ep] : g.edges) {
        if (ep.from == u) continue;  // E+_u dropped, self-loops at u included
        out.edges.emplace(e, Endpoints{ep.from, ep.to == u ? v : ep.to});
    }
    return out;
}

Graph delete_node(const Graph& g, const NodeId& u) {
    if (!g.has_node(u)) throw GraphError("unknown node: " + u);
    for (const auto& [e, ep] : g.edges) {
        if (ep.from == u || ep.to == u)
            throw GraphError("cannot delete node " + u + ": incident edge " + e +
                             " would dangle");
    }
    Graph out = g;
    out.nodes.erase(u);
    return out;
}

Graph delete_edge(const Graph& g, const EdgeId& e) {
    if (!g.has_edge(e)) throw GraphError("unknown edge: " + e);
    Graph out = g;
    out.edges.erase(e);
    return out;
}

Graph set_weight(const Graph& g, const NodeId& v, double w) {
    if (!g.has_node(v)) throw GraphError("unknown node: " + v);
    if (!(w >= 0.0)) throw GraphError("negative weight for node " + v);
    Graph out = g;
    out.nodes[v] = w;
    return out;
}

Graph swap_ends(const Graph& g, const EdgeId& e1, const EdgeId& e2) {
    if (e1 == e2) throw GraphError("cannot swap an edge with itself: " + e1);
    Endpoints p1 = g.endpoints(e1);
    Endpoints p2 = g.endpoints(e2);
    Graph out = g;
    out.edges[e1] = Endpoints{p1.from, p2.to};
    out.edges[e2] = Endpoints{p2.from, p1.to};
    return out;
}

Graph replicate_edge(const Graph& g, const EdgeId& e, int k) {
    if (k < 1) throw GraphError("replication count must be >= 1");
    Endpoints ep = g.endpoints(e);
    Graph out = g;
    for (int i = 1; i < k; ++i)
        out.edges.emplace(fresh_label(out.edges, e + "#" + std::to_string(i)), ep);
    return out;
}

Graph collapse_parallel(const Graph& g, const EdgeId& e) {
    Endpoints ep = g.endpoints(e);
    std::vector<EdgeId> removed;
    for (const auto& [f, fp] : g.edges) {
        if (fp.from != ep.from) continue;
        if (fp.to != ep.to)
            throw GraphError("collapse precondition violated: out-edge " + f + " of " +
                             ep.from + " does not end at " + ep.to);
        if (f != e) removed.push_back(f);
    }
    Graph out = g;
    for (const EdgeId& f : removed) out.edges.erase(f);
    return out;
}

namespace {
template <typename Map>
std::string fresh_label_impl(const Map& used, const std::string& base) {
    if (used.count(base) == 0) return base;
    for (int i = 2;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (used.count(candidate) == 0) return candidate;
    }
}
}  // namespace

std::string fresh_label(const std::map<std::string, double>& used, const std::string& base) {
    return fresh_label_impl(used, base);
}
std::string fresh_label(const std::map<std::string, Endpoints>& used, const std::string& base) {
    return fresh_label_impl(used, base);
}

}  // namespace edgerank
