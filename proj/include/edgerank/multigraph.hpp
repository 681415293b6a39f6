#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgerank {

using NodeId = std::string;
using EdgeId = std::string;

/// Thrown when an operation's precondition on the graph is violated
/// (unknown label, label collision, dangling endpoint, ...).
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Endpoints {
    NodeId from;
    NodeId to;
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Labeled directed multigraph with non-negative node weights.
///
/// Labels are the identities: parallel edges and self-loops are permitted
/// and each edge is a distinct entity. Both maps are ordered, so every
/// iteration over nodes or edges is in lexicographic label order; that
/// order is the canonical one used for witnesses and tie-breaking.
///
/// Graph values are treated as immutable: every transformation below
/// returns a fresh graph and never mutates its input.
struct Graph {
    std::map<NodeId, double> nodes;      // node label -> weight
    std::map<EdgeId, Endpoints> edges;   // edge label -> (from, to)

    bool has_node(const NodeId& v) const { return nodes.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edges.count(e) != 0; }

    double weight(const NodeId& v) const;
    const Endpoints& endpoints(const EdgeId& e) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Convenience builder for small literal graphs in tests and fixtures.
Graph make_graph(std::vector<std::pair<NodeId, double>> nodes,
                 std::vector<std::pair<EdgeId, Endpoints>> edges);

enum class Direction { In, Out, Both };

enum class NodeRole { Isolated, Sink, Ordinary };
enum class EdgeRole { IsolatedEdge, SourceEdge, Ordinary };

/// Pairing between the out-edges of two out-twin nodes. Each pair is
/// (out-edge of u, matched out-edge of w) with equal end nodes; the
/// pairing is canonical: per end node, edges are matched in ascending
/// label order.
struct OutTwinWitness {
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
};

struct Violation {
    std::string invariant;  // which invariant failed
    std::string label;      // offending node or edge label
    std::string detail;
};

/// Checks all structural invariants; returns the first violation found
/// (edges with dangling endpoints first, then negative node weights).
std::optional<Violation> validate(const Graph& g);

std::set<EdgeId> incident_edges(const Graph& g, const NodeId& v, Direction dir);

int in_degree(const Graph& g, const NodeId& v);
int out_degree(const Graph& g, const NodeId& v);

/// All nodes reachable from u by a nonempty path. u itself is included
/// exactly when u lies on a cycle.
std::set<NodeId> successors(const Graph& g, const NodeId& u);

NodeRole classify_node(const Graph& g, const NodeId& v);

/// A source edge is the sole edge incident to its start, which in
/// particular rules out self-loops (a self-loop is incoming to its own
/// start). An isolated edge is a source edge that is also the sole edge
/// incident to its end.
EdgeRole classify_edge(const Graph& g, const EdgeId& e);

/// Returns the canonical pairing iff the end-node multisets of the
/// out-edges of u and w coincide; absence means the nodes are not
/// out-twins.
std::optional<OutTwinWitness> out_twin_witness(const Graph& g,
                                               const NodeId& u,
                                               const NodeId& w);

/// Union of two graphs with disjoint label sets.
Graph graph_sum(const Graph& g, const Graph& h);

/// Redirect u into v: u and all of its outgoing edges are dropped (a
/// self-loop at u counts as outgoing and is dropped), every surviving
/// edge that ended at u now ends at v, and v's weight becomes b(u)+b(v).
Graph redirect(const Graph& g, const NodeId& u, const NodeId& v);

/// Removes a degree-0 node; deleting a node with incident edges is an
/// error (no cascading delete).
Graph delete_node(const Graph& g, const NodeId& u);
Graph delete_edge(const Graph& g, const EdgeId& e);
Graph set_weight(const Graph& g, const NodeId& v, double w);

/// Exchanges the ends of two distinct edges, keeping both starts.
Graph swap_ends(const Graph& g, const EdgeId& e1, const EdgeId& e2);

/// Adds k-1 fresh-labeled copies of e with the same incidence.
Graph replicate_edge(const Graph& g, const EdgeId& e, int k);

/// Inverse of replication: requires every out-edge of e's start to be a
/// parallel copy of e (all ending at e's end); removes all of them
/// except e itself.
Graph collapse_parallel(const Graph& g, const EdgeId& e);

/// A label based on `base` that does not collide with anything in `used`.
std::string fresh_label(const std::map<std::string, double>& used, const std::string& base);
std::string fresh_label(const std::map<std::string, Endpoints>& used, const std::string& base);

}  // namespace edgerank
