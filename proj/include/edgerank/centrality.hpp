#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgerank/multigraph.hpp"

namespace edgerank {

/// A measure is not defined on the given graph: admissible-class
/// violation, undefined score needed as a value, or no start
/// distribution for the random surfer.
struct MeasureUndefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed-point or power iteration failed to converge within budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    double tolerance = 1e-12;  // sup-norm threshold on successive iterates
    int max_iterations = 100000;
};

enum class Measure {
    EdgePageRank,
    Eigenedge,
    EdgeKatz,
    EdgeSeeley,
    EdgeBetweenness,
    Information,
    Gtom,
};

enum class GraphClass { All, StronglyConnectedComponents, KatzAdmissible };

struct MeasureSpec {
    Measure kind;
    std::optional<double> decay;  // required for pagerank (a in [0,1)) and katz (a >= 0)

    static MeasureSpec pagerank(double a) { return {Measure::EdgePageRank, a}; }
    static MeasureSpec eigenedge() { return {Measure::Eigenedge, std::nullopt}; }
    static MeasureSpec katz(double a) { return {Measure::EdgeKatz, a}; }
    static MeasureSpec seeley() { return {Measure::EdgeSeeley, std::nullopt}; }
    static MeasureSpec betweenness() { return {Measure::EdgeBetweenness, std::nullopt}; }
    static MeasureSpec information() { return {Measure::Information, std::nullopt}; }
    static MeasureSpec gtom() { return {Measure::Gtom, std::nullopt}; }
};

std::string measure_name(Measure m);
std::optional<Measure> measure_from_name(const std::string& name);
GraphClass admissible_class(Measure m);

/// Scores cover exactly the edge set of the scored graph. GTOM is
/// partial: an edge whose score has a zero denominator carries nullopt.
struct EdgeScores {
    std::map<EdgeId, std::optional<double>> values;

    bool defined(const EdgeId& e) const;
    /// Value of a defined score; throws MeasureUndefinedError on an
    /// undefined one and GraphError on an unknown label.
    double at(const EdgeId& e) const;
};

struct NodeScores {
    std::map<NodeId, double> values;
};

/// Unique fixed point of
///   PR_e = (a * sum of PR over incoming edges of start(e) + b(start(e))) / outdeg(start(e)),
/// computed by synchronous fixed-point iteration from the all-zeros
/// vector. On return every edge's recursion residual is at most
/// 10 * cfg.tolerance.
EdgeScores edge_pagerank(const Graph& g, double a, const SolverConfig& cfg = {});

/// PR_u = a * sum of edge PageRank over incoming edges + b(u).
NodeScores node_pagerank(const Graph& g, double a, const SolverConfig& cfg = {});

struct SurferResult {
    EdgeScores scores;
    std::map<EdgeId, double> std_error;  // standard error of each estimate
    long long walks = 0;
};

/// Monte-Carlo estimate of edge PageRank: walks start at a node sampled
/// proportionally to node weight, traverse a uniformly chosen outgoing
/// edge each step, stop at sinks, and otherwise continue with
/// probability a. Score = mean traversal count per walk, scaled by the
/// total node weight. Deterministic given (graph, a, walks, seed).
SurferResult random_surfer_detailed(const Graph& g, double a, long long walks, uint64_t seed);
EdgeScores random_surfer(const Graph& g, double a, long long walks, uint64_t seed);

/// Largest eigenvalue of the node adjacency matrix (entry (u,v) counts
/// parallel u->v edges), by power iteration on the shifted matrix A+I
/// from a uniform start; the shift keeps the iteration convergent on
/// periodic graphs.
double spectral_radius(const Graph& g, const SolverConfig& cfg = {});

/// True iff the whole graph is one strongly connected component; the
/// empty graph and a single node count as strongly connected.
bool strongly_connected(const Graph& g);

/// Admissible-class predicate for the normalized measures: every weakly
/// connected component is strongly connected (isolated nodes qualify).
bool components_strongly_connected(const Graph& g);

std::vector<std::set<NodeId>> weak_components(const Graph& g);

/// Dominant fixed point of Eig_e = (1/lambda) * sum of Eig over edges
/// incoming to start(e), normalized to sum 1.
EdgeScores eigenedge(const Graph& g, const SolverConfig& cfg = {});

/// Unique fixed point of K_e = a * sum over incoming edges of start(e) + b(start(e));
/// requires spectral_radius(g) < 1/a.
EdgeScores edge_katz(const Graph& g, double a, const SolverConfig& cfg = {});

/// Dominant fixed point of SI_e = (1/outdeg(start(e))) * sum over
/// incoming edges of start(e), normalized to sum 1. Iterates the
/// average of the last two sweeps so periodic chains converge.
EdgeScores edge_seeley(const Graph& g, const SolverConfig& cfg = {});

/// Shortest-path betweenness over edge sequences; parallel edges yield
/// distinct paths, distance counts edges.
EdgeScores edge_betweenness(const Graph& g);

/// Relative efficiency loss (Eff(G) - Eff(G-e)) / Eff(G) with
/// Eff = sum of 1/dist over ordered node pairs; unreachable pairs
/// contribute 0.
EdgeScores information_centrality(const Graph& g);

/// (common distinct out-neighbors of the ends + 1) / min of the two
/// distinct out-neighbor counts; undefined when the end is a sink.
EdgeScores gtom(const Graph& g);

/// True iff the measure is defined on g (its admissible class).
bool in_class(const MeasureSpec& spec, const Graph& g, const SolverConfig& cfg = {});

/// Uniform dispatch; validates parameters and the admissible class.
EdgeScores score(const MeasureSpec& spec, const Graph& g, const SolverConfig& cfg = {});

/// Incoming edges of v sorted by descending score, ties by ascending
/// label; undefined scores sort last.
std::vector<std::pair<EdgeId, std::optional<double>>> rank_incoming(
    const Graph& g, const NodeId& v, const MeasureSpec& spec, const SolverConfig& cfg = {});

}  // namespace edgerank
