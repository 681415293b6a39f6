#include "edgerank/centrality.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "indexed_graph.hpp"
#include "rng.hpp"

namespace edgerank {

using detail::IndexedGraph;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::EdgePageRank: return "pagerank";
        case Measure::Eigenedge: return "eigenedge";
        case Measure::EdgeKatz: return "katz";
        case Measure::EdgeSeeley: return "seeley";
        case Measure::EdgeBetweenness: return "betweenness";
        case Measure::Information: return "information";
        case Measure::Gtom: return "gtom";
    }
    return "?";
}

std::optional<Measure> measure_from_name(const std::string& name) {
    for (Measure m : {Measure::EdgePageRank, Measure::Eigenedge, Measure::EdgeKatz,
                      Measure::EdgeSeeley, Measure::EdgeBetweenness, Measure::Information,
                      Measure::Gtom}) {
        if (measure_name(m) == name) return m;
    }
    if (name == "edge-pagerank") return Measure::EdgePageRank;
    if (name == "edge-katz") return Measure::EdgeKatz;
    if (name == "edge-betweenness") return Measure::EdgeBetweenness;
    if (name == "edge-seeley") return Measure::EdgeSeeley;
    return std::nullopt;
}

GraphClass admissible_class(Measure m) {
    switch (m) {
        case Measure::Eigenedge:
        case Measure::EdgeSeeley:
        case Measure::Information:
            return GraphClass::StronglyConnectedComponents;
        case Measure::EdgeKatz:
            return GraphClass::KatzAdmissible;
        default:
            return GraphClass::All;
    }
}

bool EdgeScores::defined(const EdgeId& e) const {
    auto it = values.find(e);
    if (it == values.end()) throw GraphError("no score for edge: " + e);
    return it->second.has_value();
}

double EdgeScores::at(const EdgeId& e) const {
    auto it = values.find(e);
    if (it == values.end()) throw GraphError("no score for edge: " + e);
    if (!it->second) throw MeasureUndefinedError("score of edge " + e + " is undefined");
    return *it->second;
}

namespace {

EdgeScores to_scores(const IndexedGraph& ix, const VectorXd& x) {
    EdgeScores s;
    for (int e = 0; e < ix.m(); ++e) s.values[ix.edge_ids[e]] = x[e];
    return s;
}

void check_decay_pagerank(double a) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("decay factor must satisfy 0 <= a < 1");
}

// one synchronous sweep of the PageRank/Katz-style affine operator
//   out[e] = (mul * sum_{e' into start(e)} x[e'] + base[start(e)]) / div[start(e)]
VectorXd affine_sweep(const IndexedGraph& ix, const VectorXd& x, double mul,
                      const std::vector<double>& base, bool divide_outdeg) {
    VectorXd node_sum = VectorXd::Zero(ix.n());
    for (int v = 0; v < ix.n(); ++v) {
        double s = 0.0;
        for (int e : ix.in_edges[v]) s += x[e];
        node_sum[v] = s;
    }
    VectorXd out(ix.m());
    for (int e = 0; e < ix.m(); ++e) {
        int u = ix.from[e];
        double val = mul * node_sum[u] + base[u];
        out[e] = divide_outdeg ? val / ix.out_degree(u) : val;
    }
    return out;
}

// iterate an affine fixed point from zeros until both the sup-norm step
// and the recursion residual are below tolerance; the residual is taken
// in the unnormalized form (multiplied back by the out-degree), which is
// the contract callers rely on
VectorXd affine_fixed_point(const IndexedGraph& ix, double mul, const std::vector<double>& base,
                            bool divide_outdeg, const SolverConfig& cfg, const char* what) {
    VectorXd x = VectorXd::Zero(ix.m());
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        VectorXd next = affine_sweep(ix, x, mul, base, divide_outdeg);
        double step = ix.m() == 0 ? 0.0 : (next - x).lpNorm<Eigen::Infinity>();
        x = next;
        if (step <= cfg.tolerance) {
            VectorXd again = affine_sweep(ix, x, mul, base, divide_outdeg);
            double residual = 0.0;
            for (int e = 0; e < ix.m(); ++e) {
                double scale = divide_outdeg ? ix.out_degree(ix.from[e]) : 1.0;
                residual = std::max(residual, std::abs(again[e] - x[e]) * scale);
            }
            if (residual <= 10.0 * cfg.tolerance) return x;
        }
    }
    throw ConvergenceError(std::string(what) + " did not converge within " +
                           std::to_string(cfg.max_iterations) + " iterations");
}

std::vector<double> start_weights(const IndexedGraph& ix) {
    std::vector<double> base(ix.n());
    for (int v = 0; v < ix.n(); ++v) base[v] = ix.node_weight[v];
    return base;
}

// distinct-neighbor adjacency (indices), used by connectivity and distance code
std::vector<std::vector<int>> distinct_out(const IndexedGraph& ix) {
    std::vector<std::vector<int>> adj(ix.n());
    for (int v = 0; v < ix.n(); ++v) {
        std::set<int> s;
        for (int e : ix.out_edges[v]) s.insert(ix.to[e]);
        adj[v].assign(s.begin(), s.end());
    }
    return adj;
}

std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v]) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

bool reaches_all(const std::vector<std::vector<int>>& adj, int src,
                 const std::vector<int>& members) {
    std::vector<int> dist = bfs_dist(adj, src);
    for (int v : members)
        if (dist[v] == -1) return false;
    return true;
}

double efficiency(const std::vector<std::vector<int>>& adj) {
    double eff = 0.0;
    int n = static_cast<int>(adj.size());
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist = bfs_dist(adj, s);
        for (int t = 0; t < n; ++t)
            if (t != s && dist[t] > 0) eff += 1.0 / dist[t];
    }
    return eff;
}

void require_class_scc(const Graph& g, const char* what) {
    if (g.edges.empty())
        throw MeasureUndefinedError(std::string(what) +
                                    " requires at least one edge (class violation)");
    if (!components_strongly_connected(g))
        throw MeasureUndefinedError(
            std::string(what) +
            " requires every weakly connected component to be strongly connected "
            "(class violation)");
}

}  // namespace

EdgeScores edge_pagerank(const Graph& g, double a, const SolverConfig& cfg) {
    check_decay_pagerank(a);
    IndexedGraph ix(g);
    VectorXd x = affine_fixed_point(ix, a, start_weights(ix), true, cfg, "edge_pagerank");
    return to_scores(ix, x);
}

NodeScores node_pagerank(const Graph& g, double a, const SolverConfig& cfg) {
    EdgeScores pr = edge_pagerank(g, a, cfg);
    NodeScores out;
    for (const auto& [v, w] : g.nodes) out.values[v] = w;
    for (const auto& [e, ep] : g.edges) out.values[ep.to] += a * *pr.values.at(e);
    return out;
}

SurferResult random_surfer_detailed(const Graph& g, double a, long long walks, uint64_t seed) {
    check_decay_pagerank(a);
    if (walks < 1) throw std::invalid_argument("walk count must be >= 1");
    IndexedGraph ix(g);
    double total_weight = 0.0;
    for (double w : ix.node_weight) total_weight += w;
    if (!(total_weight > 0.0))
        throw MeasureUndefinedError("random surfer needs a positive total node weight");

    std::vector<double> cumulative(ix.n());
    double acc = 0.0;
    for (int v = 0; v < ix.n(); ++v) {
        acc += ix.node_weight[v];
        cumulative[v] = acc;
    }

    detail::Rng rng(seed);
    std::vector<double> sum(ix.m(), 0.0), sumsq(ix.m(), 0.0);
    std::vector<double> count(ix.m(), 0.0);
    std::vector<int> touched;
    touched.reserve(64);

    for (long long w = 0; w < walks; ++w) {
        double r = rng.real() * total_weight;
        int cur = static_cast<int>(
            std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
        if (cur >= ix.n()) cur = ix.n() - 1;  // guards r == total_weight rounding

        while (!ix.out_edges[cur].empty()) {
            int e = ix.out_edges[cur][rng.below(ix.out_edges[cur].size())];
            if (count[e] == 0.0) touched.push_back(e);
            count[e] += 1.0;
            cur = ix.to[e];
            if (ix.out_edges[cur].empty()) break;  // sinks end the walk
            if (!(rng.real() < a)) break;
        }
        for (int e : touched) {
            sum[e] += count[e];
            sumsq[e] += count[e] * count[e];
            count[e] = 0.0;
        }
        touched.clear();
    }

    SurferResult out;
    out.walks = walks;
    double nw = static_cast<double>(walks);
    for (int e = 0; e < ix.m(); ++e) {
        double mean = sum[e] / nw;
        double var = std::max(0.0, sumsq[e] / nw - mean * mean);
        out.scores.values[ix.edge_ids[e]] = mean * total_weight;
        out.std_error[ix.edge_ids[e]] = std::sqrt(var / nw) * total_weight;
    }
    return out;
}

EdgeScores random_surfer(const Graph& g, double a, long long walks, uint64_t seed) {
    return random_surfer_detailed(g, a, walks, seed).scores;
}

namespace {

// iterative Tarjan over a distinct-neighbor adjacency; fills component
// ids in reverse topological order
std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj, int& count) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<int> stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::pair<int, int>> frames;
    int next_index = 0;
    count = 0;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            int v = frames.back().first;
            if (frames.back().second == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (frames.back().second < static_cast<int>(adj[v].size())) {
                int w = adj[v][frames.back().second++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = count;
                    if (w == v) break;
                }
                ++count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

// Perron root of one irreducible block by shifted power iteration. The
// shift makes the block primitive and keeps the iterates positive, so
// the Collatz-Wielandt ratios enclose the root with a monotonically
// shrinking gap; stopping on the gap is certified and immune to the
// oscillation that complex subdominant eigenvalues cause in plain
// estimate sequences.
double block_spectral_radius(const MatrixXd& adj, const SolverConfig& cfg) {
    int n = static_cast<int>(adj.rows());
    VectorXd x = VectorXd::Constant(n, 1.0 / n);
    for (int round = 0; round < 2; ++round) {
        long long budget = static_cast<long long>(cfg.max_iterations) * (round == 0 ? 1 : 10);
        for (long long iter = 0; iter < budget; ++iter) {
            VectorXd y = adj.transpose() * x + x;
            double lo = (y.array() / x.array()).minCoeff();
            double hi = (y.array() / x.array()).maxCoeff();
            x = y / y.sum();
            if (hi - lo <= cfg.tolerance * std::max(1.0, hi)) {
                double estimate = 0.5 * (lo + hi) - 1.0;
                return estimate < 0.0 ? 0.0 : estimate;
            }
        }
    }
    throw ConvergenceError("spectral radius power iteration did not converge");
}

}  // namespace

double spectral_radius(const Graph& g, const SolverConfig& cfg) {
    if (g.nodes.empty()) throw GraphError("spectral radius of an empty graph");
    IndexedGraph ix(g);
    int n = ix.n();

    // The adjacency matrix is block triangular over the condensation, so
    // its spectrum is the union of the strongly-connected blocks; the
    // radius is the max of their Perron roots. Iterating per block also
    // keeps the power method geometric (no defective dominant part).
    std::vector<std::vector<int>> adj = distinct_out(ix);
    int comp_count = 0;
    std::vector<int> comp = scc_ids(adj, comp_count);
    std::vector<std::vector<int>> members(comp_count);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

    double radius = 0.0;
    for (const std::vector<int>& block : members) {
        if (block.size() == 1) {
            int v = block[0];
            double loops = 0.0;
            for (int e : ix.out_edges[v])
                if (ix.to[e] == v) loops += 1.0;
            radius = std::max(radius, loops);
            continue;
        }
        std::vector<int> local(n, -1);
        for (size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<int>(i);
        MatrixXd sub = MatrixXd::Zero(block.size(), block.size());
        for (int v : block)
            for (int e : ix.out_edges[v])
                if (local[ix.to[e]] != -1) sub(local[v], local[ix.to[e]]) += 1.0;
        radius = std::max(radius, block_spectral_radius(sub, cfg));
    }
    return radius;
}

std::vector<std::set<NodeId>> weak_components(const Graph& g) {
    std::map<NodeId, NodeId> parent;
    for (const auto& [v, w] : g.nodes) parent[v] = v;
    auto find = [&](NodeId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [e, ep] : g.edges) parent[find(ep.from)] = find(ep.to);

    std::map<NodeId, std::set<NodeId>> groups;
    for (const auto& [v, w] : g.nodes) groups[find(v)].insert(v);
    std::vector<std::set<NodeId>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool strongly_connected(const Graph& g) {
    if (g.nodes.size() <= 1) return true;
    IndexedGraph ix(g);
    std::vector<std::vector<int>> fwd = distinct_out(ix);
    std::vector<std::vector<int>> bwd(ix.n());
    for (int v = 0; v < ix.n(); ++v)
        for (int w : fwd[v]) bwd[w].push_back(v);
    std::vector<int> all(ix.n());
    for (int v = 0; v < ix.n(); ++v) all[v] = v;
    return reaches_all(fwd, 0, all) && reaches_all(bwd, 0, all);
}

bool components_strongly_connected(const Graph& g) {
    IndexedGraph ix(g);
    std::vector<std::vector<int>> fwd = distinct_out(ix);
    std::vector<std::vector<int>> bwd(ix.n());
    for (int v = 0; v < ix.n(); ++v)
        for (int w : fwd[v]) bwd[w].push_back(v);

    for (const auto& comp : weak_components(g)) {
        if (comp.size() <= 1) continue;
        std::vector<int> members;
        for (const NodeId& v : comp) members.push_back(ix.node_index.at(v));
        if (!reaches_all(fwd, members[0], members)) return false;
        if (!reaches_all(bwd, members[0], members)) return false;
    }
    return true;
}

EdgeScores eigenedge(const Graph& g, const SolverConfig& cfg) {
    require_class_scc(g, "eigenedge");
    IndexedGraph ix(g);
    int m = ix.m();
    const std::vector<double> zero(ix.n(), 0.0);
    VectorXd x = VectorXd::Constant(m, 1.0 / m);
    for (int round = 0; round < 2; ++round) {
        int budget = cfg.max_iterations * (round == 0 ? 1 : 10);
        for (int iter = 0; iter < budget; ++iter) {
            // shifted edge-propagation operator: y_e = sum_{e' into start(e)} x_e' + x_e
            VectorXd y = affine_sweep(ix, x, 1.0, zero, false) + x;
            double norm = y.sum();
            double estimate = norm - 1.0;
            VectorXd next = y / norm;
            double step = (next - x).lpNorm<Eigen::Infinity>();
            x = next;
            if (step > cfg.tolerance) continue;
            // accept only once the eigen-equation residual is certified
            VectorXd swept = affine_sweep(ix, x, 1.0, zero, false);
            double residual = (swept - estimate * x).lpNorm<Eigen::Infinity>();
            if (residual <= 10.0 * cfg.tolerance * std::max(1.0, estimate)) {
                if (estimate <= 1e-9)
                    throw MeasureUndefinedError("eigenedge: zero dominant eigenvalue");
                return to_scores(ix, x);
            }
        }
    }
    throw ConvergenceError("eigenedge power iteration did not converge");
}

EdgeScores edge_katz(const Graph& g, double a, const SolverConfig& cfg) {
    if (!(a >= 0.0)) throw std::invalid_argument("katz decay factor must be >= 0");
    if (a > 0.0 && !g.nodes.empty()) {
        double lambda = spectral_radius(g, cfg);
        if (!(lambda < 1.0 / a))
            throw MeasureUndefinedError(
                "katz requires spectral radius < 1/a (class violation): lambda = " +
                std::to_string(lambda));
    }
    IndexedGraph ix(g);
    VectorXd x = affine_fixed_point(ix, a, start_weights(ix), false, cfg, "edge_katz");
    return to_scores(ix, x);
}

EdgeScores edge_seeley(const Graph& g, const SolverConfig& cfg) {
    require_class_scc(g, "edge_seeley");
    IndexedGraph ix(g);
    int m = ix.m();
    std::vector<double> zero(ix.n(), 0.0);
    VectorXd x = VectorXd::Constant(m, 1.0 / m);
    for (int round = 0; round < 2; ++round) {
        int budget = cfg.max_iterations * (round == 0 ? 1 : 10);
        for (int iter = 0; iter < budget; ++iter) {
            VectorXd swept = affine_sweep(ix, x, 1.0, zero, true);
            // average of the last two sweeps; plain iteration oscillates on
            // periodic chains
            VectorXd next = 0.5 * (x + swept);
            next /= next.sum();
            double step = (next - x).lpNorm<Eigen::Infinity>();
            x = next;
            if (step <= cfg.tolerance) {
                VectorXd res = affine_sweep(ix, x, 1.0, zero, true) - x;
                if (res.lpNorm<Eigen::Infinity>() <= 10.0 * cfg.tolerance)
                    return to_scores(ix, x);
            }
        }
    }
    throw ConvergenceError("edge_seeley iteration did not converge");
}

EdgeScores edge_betweenness(const Graph& g) {
    IndexedGraph ix(g);
    int n = ix.n(), m = ix.m();
    std::vector<double> acc(m, 0.0);

    for (int s = 0; s < n; ++s) {
        // BFS layering with shortest edge-path counts; parallel edges each
        // contribute a distinct path
        std::vector<int> dist(n, -1);
        std::vector<double> sigma(n, 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        std::deque<int> q{s};
        std::vector<int> visited_order;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            visited_order.push_back(v);
            for (int e : ix.out_edges[v]) {
                int w = ix.to[e];
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }

        // group nodes by layer for the reverse pass
        int max_layer = 0;
        for (int v : visited_order) max_layer = std::max(max_layer, dist[v]);
        std::vector<std::vector<int>> layers(max_layer + 1);
        for (int v : visited_order) layers[dist[v]].push_back(v);

        std::vector<double> psi(n, 0.0);
        for (int t = 0; t < n; ++t) {
            if (t == s || dist[t] < 1) continue;
            // psi[v] = number of shortest-path suffixes from v to t
            for (int v : visited_order) psi[v] = 0.0;
            psi[t] = 1.0;
            for (int layer = dist[t] - 1; layer >= 0; --layer) {
                for (int v : layers[layer]) {
                    double total = 0.0;
                    for (int e : ix.out_edges[v]) {
                        int w = ix.to[e];
                        if (dist[w] == dist[v] + 1) total += psi[w];
                    }
                    psi[v] = total;
                }
            }
            // delta_{s,t}(e) = sigma[start] * psi[end] for edges on the BFS dag
            for (int e = 0; e < m; ++e) {
                int u = ix.from[e], v = ix.to[e];
                if (dist[u] == -1 || dist[v] != dist[u] + 1 || dist[u] >= dist[t]) continue;
                double through = sigma[u] * psi[v];
                if (through > 0.0) acc[e] += through / sigma[t];
            }
        }
    }

    EdgeScores out;
    for (int e = 0; e < m; ++e) out.values[ix.edge_ids[e]] = acc[e];
    return out;
}

EdgeScores information_centrality(const Graph& g) {
    require_class_scc(g, "information centrality");
    if (g.nodes.size() < 2)
        throw MeasureUndefinedError("information centrality needs at least two nodes");
    IndexedGraph ix(g);
    std::vector<std::vector<int>> adj = distinct_out(ix);
    double eff = efficiency(adj);
    if (!(eff > 0.0))
        throw MeasureUndefinedError("information centrality: network efficiency is zero");

    EdgeScores out;
    for (int e = 0; e < ix.m(); ++e) {
        // adjacency without edge e; parallel copies keep the neighbor
        std::vector<std::vector<int>> reduced(ix.n());
        for (int v = 0; v < ix.n(); ++v) {
            std::set<int> s;
            for (int f : ix.out_edges[v])
                if (f != e) s.insert(ix.to[f]);
            reduced[v].assign(s.begin(), s.end());
        }
        double eff_without = efficiency(reduced);
        out.values[ix.edge_ids[e]] = (eff - eff_without) / eff;
    }
    return out;
}

EdgeScores gtom(const Graph& g) {
    IndexedGraph ix(g);
    std::vector<std::set<int>> nbr(ix.n());
    for (int e = 0; e < ix.m(); ++e) nbr[ix.from[e]].insert(ix.to[e]);

    EdgeScores out;
    for (int e = 0; e < ix.m(); ++e) {
        const std::set<int>& nu = nbr[ix.from[e]];
        const std::set<int>& nv = nbr[ix.to[e]];
        size_t denom = std::min(nu.size(), nv.size());
        if (denom == 0) {
            out.values[ix.edge_ids[e]] = std::nullopt;  // end node is a sink
            continue;
        }
        size_t common = 0;
        for (int w : nu) common += nv.count(w);
        out.values[ix.edge_ids[e]] = (static_cast<double>(common) + 1.0) / denom;
    }
    return out;
}

bool in_class(const MeasureSpec& spec, const Graph& g, const SolverConfig& cfg) {
    switch (admissible_class(spec.kind)) {
        case GraphClass::All:
            return true;
        case GraphClass::StronglyConnectedComponents:
            if (g.edges.empty() || !components_strongly_connected(g)) return false;
            if (spec.kind == Measure::Information && g.nodes.size() < 2) return false;
            return true;
        case GraphClass::KatzAdmissible: {
            if (!spec.decay) throw std::invalid_argument("katz needs a decay factor");
            if (*spec.decay == 0.0) return true;
            if (g.nodes.empty()) return true;
            return spectral_radius(g, cfg) < 1.0 / *spec.decay;
        }
    }
    return false;
}

EdgeScores score(const MeasureSpec& spec, const Graph& g, const SolverConfig& cfg) {
    bool needs_decay =
        spec.kind == Measure::EdgePageRank || spec.kind == Measure::EdgeKatz;
    if (needs_decay && !spec.decay)
        throw std::invalid_argument(measure_name(spec.kind) + " needs a decay factor");
    if (!needs_decay && spec.decay)
        throw std::invalid_argument(measure_name(spec.kind) + " takes no decay factor");

    switch (spec.kind) {
        case Measure::EdgePageRank: return edge_pagerank(g, *spec.decay, cfg);
        case Measure::Eigenedge: return eigenedge(g, cfg);
        case Measure::EdgeKatz: return edge_katz(g, *spec.decay, cfg);
        case Measure::EdgeSeeley: return edge_seeley(g, cfg);
        case Measure::EdgeBetweenness: return edge_betweenness(g);
        case Measure::Information: return information_centrality(g);
        case Measure::Gtom: return gtom(g);
    }
    throw std::invalid_argument("unknown measure");
}

std::vector<std::pair<EdgeId, std::optional<double>>> rank_incoming(
    const Graph& g, const NodeId& v, const MeasureSpec& spec, const SolverConfig& cfg) {
    std::set<EdgeId> incoming = incident_edges(g, v, Direction::In);
    EdgeScores scores = score(spec, g, cfg);

    std::vector<std::pair<EdgeId, std::optional<double>>> out;
    for (const EdgeId& e : incoming) out.emplace_back(e, scores.values.at(e));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.has_value() != b.second.has_value()) return a.second.has_value();
        if (a.second && b.second && *a.second != *b.second) return *a.second > *b.second;
        return a.first < b.first;
    });
    return out;
}

}  // namespace edgerank
