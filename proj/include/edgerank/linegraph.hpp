#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "edgerank/centrality.hpp"
#include "edgerank/multigraph.hpp"

namespace edgerank {

/// Line digraph of a graph: one node per source edge (same label,
/// weight b(start)/outdeg(start)), and an arc e_i -> e_j whenever e_i
/// ends where e_j starts. Arc labels are generated as "<e_i>-><e_j>";
/// the provenance map keeps the encoded adjacency pair per arc.
struct LineGraphResult {
    Graph graph;
    std::map<EdgeId, std::pair<EdgeId, EdgeId>> provenance;
};

LineGraphResult line_graph(const Graph& g);

struct EquivalenceReport {
    double max_discrepancy = 0.0;
    EdgeId argmax;                        // edge with the largest difference
    std::map<EdgeId, double> differences; // |node PR of L(G) - edge PR of G|
};

/// Compares node PageRank of L(G) against edge PageRank of G; the two
/// agree exactly, so the report's maximum stays within solver noise.
EquivalenceReport pagerank_linegraph_equivalence(const Graph& g, double a,
                                                 const SolverConfig& cfg = {});

/// Closure-condition witness: arcs (b,c), (b,d), (a,c) exist but (a,d)
/// does not, which no line digraph allows.
struct HeuchenneWitness {
    NodeId a, b, c, d;
    friend bool operator==(const HeuchenneWitness&, const HeuchenneWitness&) = default;
};

/// All closure violations in canonical (a,c,b,d) order; requires a graph
/// without parallel arcs between the same ordered node pair (collapse
/// first). Empty result means the necessary condition holds everywhere.
std::vector<HeuchenneWitness> heuchenne_witnesses(const Graph& g);

/// First witness, or nullopt when the closure condition holds. This is
/// a necessary-condition check only, not full line-digraph recognition.
std::optional<HeuchenneWitness> heuchenne_check(const Graph& g);

}  // namespace edgerank
