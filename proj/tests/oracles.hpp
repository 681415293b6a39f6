#pragma once

// Test-only oracles. Each one reaches the quantity under test by an
// independent route (dense linear solve, explicit path enumeration, a
// general eigensolver) so the production solvers can be checked against
// frozen or recomputed values.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "edgerank/multigraph.hpp"

namespace oracle {

using edgerank::EdgeId;
using edgerank::Graph;
using edgerank::NodeId;

struct Index {
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes;
    std::map<EdgeId, int> edge_of;
    std::map<NodeId, int> node_of;
    std::vector<int> from, to;

    explicit Index(const Graph& g) {
        for (const auto& [v, w] : g.nodes) {
            node_of[v] = static_cast<int>(nodes.size());
            nodes.push_back(v);
        }
        for (const auto& [e, ep] : g.edges) {
            edge_of[e] = static_cast<int>(edges.size());
            edges.push_back(e);
            from.push_back(node_of.at(ep.from));
            to.push_back(node_of.at(ep.to));
        }
    }
};

// Edge PageRank by solving the linear system of the recursion directly:
//   outdeg(u) * x_e - a * sum_{e' into u} x_e' = b(u)   for e starting at u.
inline std::map<EdgeId, double> pagerank_linear_solve(const Graph& g, double a) {
    Index ix(g);
    int m = static_cast<int>(ix.edges.size());
    std::vector<double> outdeg(ix.nodes.size(), 0.0);
    for (int e = 0; e < m; ++e) outdeg[ix.from[e]] += 1.0;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs(m);
    for (int e = 0; e < m; ++e) {
        A(e, e) += outdeg[ix.from[e]];
        for (int f = 0; f < m; ++f)
            if (ix.to[f] == ix.from[e]) A(e, f) -= a;
        rhs[e] = g.nodes.at(ix.nodes[ix.from[e]]);
    }
    Eigen::VectorXd x = A.fullPivLu().solve(rhs);
    std::map<EdgeId, double> out;
    for (int e = 0; e < m; ++e) out[ix.edges[e]] = x[e];
    return out;
}

inline std::vector<std::vector<int>> distinct_adjacency(const Index& ix) {
    std::vector<std::set<int>> sets(ix.nodes.size());
    for (size_t e = 0; e < ix.edges.size(); ++e) sets[ix.from[e]].insert(ix.to[e]);
    std::vector<std::vector<int>> adj(ix.nodes.size());
    for (size_t v = 0; v < sets.size(); ++v) adj[v].assign(sets[v].begin(), sets[v].end());
    return adj;
}

inline std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

// Edge betweenness by explicit enumeration of all shortest edge-walks,
// accumulated pair by pair in (s, t) label order.
inline std::map<EdgeId, double> betweenness_bruteforce(const Graph& g) {
    Index ix(g);
    int n = static_cast<int>(ix.nodes.size());
    int m = static_cast<int>(ix.edges.size());
    std::vector<std::vector<int>> out_edges(n);
    for (int e = 0; e < m; ++e) out_edges[ix.from[e]].push_back(e);
    std::vector<std::vector<int>> adj = distinct_adjacency(ix);

    std::vector<double> acc(m, 0.0);
    std::vector<double> count(m, 0.0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist = bfs_dist(adj, s);
        for (int t = 0; t < n; ++t) {
            if (t == s || dist[t] < 1) continue;
            std::fill(count.begin(), count.end(), 0.0);
            double total = 0.0;
            // depth-first enumeration of every edge sequence of length
            // exactly dist[t] from s to t
            std::vector<int> stack_edge;
            std::function<void(int)> walk = [&](int v) {
                int depth = static_cast<int>(stack_edge.size());
                if (depth == dist[t]) {
                    if (v == t) {
                        total += 1.0;
                        for (int e : stack_edge) count[e] += 1.0;
                    }
                    return;
                }
                for (int e : out_edges[v]) {
                    stack_edge.push_back(e);
                    walk(ix.to[e]);
                    stack_edge.pop_back();
                }
            };
            walk(s);
            for (int e = 0; e < m; ++e)
                if (count[e] > 0.0) acc[e] += count[e] / total;
        }
    }
    std::map<EdgeId, double> result;
    for (int e = 0; e < m; ++e) result[ix.edges[e]] = acc[e];
    return result;
}

// GTOM directly from successor sets assembled with std::set.
inline std::map<EdgeId, std::optional<double>> gtom_oracle(const Graph& g) {
    std::map<NodeId, std::set<NodeId>> succ;
    for (const auto& [e, ep] : g.edges) succ[ep.from].insert(ep.to);
    std::map<EdgeId, std::optional<double>> out;
    for (const auto& [e, ep] : g.edges) {
        const std::set<NodeId>& nu = succ[ep.from];
        const std::set<NodeId>& nv = succ[ep.to];
        size_t denom = std::min(nu.size(), nv.size());
        if (denom == 0) {
            out[e] = std::nullopt;
            continue;
        }
        size_t common = 0;
        for (const NodeId& w : nu) common += nv.count(w);
        out[e] = (static_cast<double>(common) + 1.0) / static_cast<double>(denom);
    }
    return out;
}

// Seeley stationary scores by least squares on the exact linear system
// (T - I) x = 0, sum(x) = 1.
inline std::map<EdgeId, double> seeley_linear_solve(const Graph& g) {
    Index ix(g);
    int m = static_cast<int>(ix.edges.size());
    std::vector<double> outdeg(ix.nodes.size(), 0.0);
    for (int e = 0; e < m; ++e) outdeg[ix.from[e]] += 1.0;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m + 1, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    for (int e = 0; e < m; ++e) {
        A(e, e) -= 1.0;
        for (int f = 0; f < m; ++f)
            if (ix.to[f] == ix.from[e]) A(e, f) += 1.0 / outdeg[ix.from[e]];
    }
    for (int e = 0; e < m; ++e) A(m, e) = 1.0;
    rhs[m] = 1.0;
    Eigen::VectorXd x = A.colPivHouseholderQr().solve(rhs);
    std::map<EdgeId, double> out;
    for (int e = 0; e < m; ++e) out[ix.edges[e]] = x[e];
    return out;
}

// Eigenedge via a general eigensolver on the edge-propagation matrix.
inline std::map<EdgeId, double> eigenedge_eigensolver(const Graph& g) {
    Index ix(g);
    int m = static_cast<int>(ix.edges.size());
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
    for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f)
            if (ix.to[f] == ix.from[e]) P(e, f) += 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(P);
    // the Perron root is the real eigenvalue among those of maximal
    // modulus (periodic graphs carry complex ones of the same modulus)
    int best = 0;
    for (int i = 1; i < m; ++i) {
        double abs_i = std::abs(solver.eigenvalues()[i]);
        double abs_best = std::abs(solver.eigenvalues()[best]);
        if (abs_i > abs_best + 1e-9 ||
            (abs_i > abs_best - 1e-9 &&
             solver.eigenvalues()[i].real() > solver.eigenvalues()[best].real()))
            best = i;
    }
    Eigen::VectorXcd vec = solver.eigenvectors().col(best);
    Eigen::VectorXd real = vec.real();
    double sum = real.sum();
    real /= sum;  // Perron vector has one sign; normalizing fixes it
    std::map<EdgeId, double> out;
    for (int e = 0; e < m; ++e) out[ix.edges[e]] = real[e];
    return out;
}

// Efficiency via Floyd-Warshall distances (the implementation uses BFS).
inline double efficiency_floyd_warshall(const Graph& g) {
    Index ix(g);
    int n = static_cast<int>(ix.nodes.size());
    const double inf = 1e18;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (const auto& [e, ep] : g.edges) d[ix.node_of[ep.from]][ix.node_of[ep.to]] = 1.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    double eff = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d[i][j] < inf) eff += 1.0 / d[i][j];
    return eff;
}

inline std::map<EdgeId, double> information_oracle(const Graph& g) {
    double eff = efficiency_floyd_warshall(g);
    std::map<EdgeId, double> out;
    for (const auto& [e, ep] : g.edges) {
        Graph without = edgerank::delete_edge(g, e);
        out[e] = (eff - efficiency_floyd_warshall(without)) / eff;
    }
    return out;
}

// Strong connectivity by all-pairs reachability.
inline bool strongly_connected_oracle(const Graph& g) {
    Index ix(g);
    int n = static_cast<int>(ix.nodes.size());
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj = distinct_adjacency(ix);
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist = bfs_dist(adj, s);
        for (int t = 0; t < n; ++t)
            if (dist[t] == -1) return false;
    }
    return true;
}

}  // namespace oracle
