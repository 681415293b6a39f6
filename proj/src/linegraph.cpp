#include "edgerank/linegraph.hpp"

#include <algorithm>
#include <cmath>

#include "indexed_graph.hpp"

namespace edgerank {

LineGraphResult line_graph(const Graph& g) {
    detail::IndexedGraph ix(g);
    LineGraphResult out;
    for (int e = 0; e < ix.m(); ++e) {
        int u = ix.from[e];
        out.graph.nodes[ix.edge_ids[e]] = ix.node_weight[u] / ix.out_degree(u);
    }
    for (int ei = 0; ei < ix.m(); ++ei) {
        // arcs leave ei toward every edge starting at ei's end; a
        // self-loop pairs with itself
        for (int ej : ix.out_edges[ix.to[ei]]) {
            const EdgeId& a = ix.edge_ids[ei];
            const EdgeId& b = ix.edge_ids[ej];
            EdgeId label = fresh_label(out.graph.edges, a + "->" + b);
            out.graph.edges.emplace(label, Endpoints{a, b});
            out.provenance.emplace(label, std::make_pair(a, b));
        }
    }
    return out;
}

EquivalenceReport pagerank_linegraph_equivalence(const Graph& g, double a,
                                                 const SolverConfig& cfg) {
    EdgeScores edge_pr = edge_pagerank(g, a, cfg);
    NodeScores line_pr = node_pagerank(line_graph(g).graph, a, cfg);

    EquivalenceReport report;
    for (const auto& [e, value] : edge_pr.values) {
        double diff = std::abs(*value - line_pr.values.at(e));
        report.differences[e] = diff;
        if (diff >= report.max_discrepancy) {
            report.max_discrepancy = diff;
            report.argmax = e;
        }
    }
    return report;
}

std::vector<HeuchenneWitness> heuchenne_witnesses(const Graph& g) {
    detail::IndexedGraph ix(g);
    int n = ix.n();
    std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> out(n), in(n);
    for (int e = 0; e < ix.m(); ++e) {
        int u = ix.from[e], v = ix.to[e];
        if (arc[u][v])
            throw GraphError("parallel arcs between " + ix.node_ids[u] + " and " +
                             ix.node_ids[v] + "; collapse them first");
        arc[u][v] = true;
        out[u].push_back(v);
        in[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(out[v].begin(), out[v].end());
        std::sort(in[v].begin(), in[v].end());
    }

    std::vector<HeuchenneWitness> found;
    for (int a = 0; a < n; ++a) {
        for (int c : out[a]) {
            for (int b : in[c]) {
                if (b == a) continue;
                for (int d : out[b]) {
                    if (!arc[a][d])
                        found.push_back(HeuchenneWitness{ix.node_ids[a], ix.node_ids[b],
                                                         ix.node_ids[c], ix.node_ids[d]});
                }
            }
        }
    }
    return found;
}

std::optional<HeuchenneWitness> heuchenne_check(const Graph& g) {
    std::vector<HeuchenneWitness> all = heuchenne_witnesses(g);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace edgerank
