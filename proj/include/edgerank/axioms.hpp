#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgerank/centrality.hpp"
#include "edgerank/multigraph.hpp"

namespace edgerank {

enum class Axiom {
    NodeDeletion,
    EdgeDeletion,
    EdgeMultiplication,
    EdgeSwap,
    NodeRedirect,
    Baseline,
};

std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);
const std::vector<Axiom>& all_axioms();

enum class CheckStatus { Pass, Fail, Vacuous, Skipped };
std::string status_name(CheckStatus s);

struct ScoreDiff {
    EdgeId edge;
    std::optional<double> expected;  // nullopt marks an undefined score
    std::optional<double> actual;
};

struct CheckWitness {
    Graph graph;                 // input graph of the failing site
    std::string transformation;  // transformation parameters, e.g. "delete edge e3"
    std::vector<ScoreDiff> diffs;
};

struct AxiomCheckResult {
    CheckStatus status = CheckStatus::Skipped;
    double max_discrepancy = 0.0;
    std::optional<CheckWitness> witness;  // present on every Fail
    std::string note;                     // skip/vacuous reason
};

/// Knobs for randomized falsification. tol_pre (Edge Swap equality
/// slack) is kept far below tol_check so solver noise cannot fabricate
/// counterexamples.
struct TrialConfig {
    int trials = 1000;
    uint64_t seed = 0;
    int n_min = 2, n_max = 6;   // node count range
    int m_min = 1, m_max = 12;  // edge count range
    double w_max = 1.0;         // weights uniform in [0, w_max]
    bool allow_self_loops = true;
    bool allow_parallel = true;
    double tol_check = 1e-6;   // violation threshold
    double tol_solver = 1e-12;
    double tol_pre = 1e-10;    // Edge Swap precondition slack
    int solver_max_iterations = 100000;

    SolverConfig solver() const { return {tol_solver, solver_max_iterations}; }
};

// ---- single-site axiom checks ---------------------------------------------
// Each check applies one transformation at one site and compares the
// measure's scores against what the axiom demands. A site is Skipped
// when the input or transformed graph leaves the measure's admissible
// class, or when a score in the comparison set is undefined (GTOM);
// Baseline instead reports an undefined isolated-edge score as a Fail,
// recording the zero-denominator finding.

AxiomCheckResult check_node_deletion(const MeasureSpec& spec, const Graph& g,
                                     const NodeId& u, const TrialConfig& cfg);
AxiomCheckResult check_edge_deletion(const MeasureSpec& spec, const Graph& g,
                                     const EdgeId& deleted, const TrialConfig& cfg);
AxiomCheckResult check_edge_multiplication(const MeasureSpec& spec, const Graph& g,
                                           const EdgeId& kept, const TrialConfig& cfg);
AxiomCheckResult check_edge_swap(const MeasureSpec& spec, const Graph& g, const EdgeId& e1,
                                 const EdgeId& e2, const TrialConfig& cfg);
AxiomCheckResult check_node_redirect(const MeasureSpec& spec, const Graph& g, const NodeId& u,
                                     const NodeId& w, const TrialConfig& cfg);
AxiomCheckResult check_baseline(const MeasureSpec& spec, const Graph& g, const EdgeId& e,
                                const TrialConfig& cfg);

// ---- derived properties (consequences of the axioms) -----------------------

/// Scores on g and on h are unchanged in the disjoint sum g + h.
AxiomCheckResult check_locality(const MeasureSpec& spec, const Graph& g, const Graph& h,
                                const TrialConfig& cfg);
/// Scores are unchanged when a sink's weight is zeroed.
AxiomCheckResult check_sink_weight(const MeasureSpec& spec, const Graph& g, const NodeId& sink,
                                   const TrialConfig& cfg);
/// A source edge scores exactly the weight of its start.
AxiomCheckResult check_source_edge(const MeasureSpec& spec, const Graph& g, const EdgeId& e,
                                   const TrialConfig& cfg);

// ---- randomized search ------------------------------------------------------

/// Deterministic random multigraph for a graph class. The
/// strongly-connected class plants a random Hamiltonian cycle and adds
/// random extra edges; the Katz class rejection-samples on the spectral
/// radius bound for the given decay.
Graph random_graph(GraphClass cls, const TrialConfig& cfg, uint64_t seed,
                   std::optional<double> katz_decay = std::nullopt);

struct FalsifyOutcome {
    std::optional<AxiomCheckResult> counterexample;  // first Fail found
    int trials_run = 0;
    long long sites_checked = 0;  // sites that produced a Pass or Fail
    long long sites_skipped = 0;
    long long sites_vacuous = 0;
    double max_discrepancy = 0.0;  // over passing sites
};

/// Runs cfg.trials independent trials: sample a graph in the measure's
/// class, enumerate applicable transformation sites (plus a few
/// synthesized ones so every axiom has sites), and return the first
/// failing check. Deterministic given (spec, axiom, cfg).
FalsifyOutcome falsify(const MeasureSpec& spec, Axiom axiom, const TrialConfig& cfg);

enum class MatrixVerdict { Satisfied, Violated, Vacuous };
std::string verdict_name(MatrixVerdict v);

struct MatrixCell {
    MatrixVerdict verdict;
    FalsifyOutcome outcome;
};

/// Bounded-evidence satisfaction table: "Satisfied" means no
/// counterexample within the trial budget, never a proof.
struct SatisfactionMatrix {
    std::vector<MeasureSpec> measures;
    std::vector<std::vector<MatrixCell>> cells;  // [measure][axiom]
};

SatisfactionMatrix satisfaction_matrix(const TrialConfig& cfg, double pagerank_alpha = 0.9,
                                       double katz_alpha = 0.3);

// ---- named fixtures ---------------------------------------------------------

struct FixtureParams {
    double x = 1.0;
    double y = 0.0;
    int k = 1;
    double a = 0.9;  // decay used for the expected closed forms
};

/// A construction graph with closed-form expected edge PageRank scores
/// (empty for the fig* fixtures, whose expectations live in tests).
struct Fixture {
    std::string name;
    Graph graph;
    std::map<EdgeId, double> expected;
};

/// Names: two-path(x,y), self-loop(x), swap-pair(a), star(x,k),
/// star-edge(x,y,k), fig1, fig5, fig5-swapped.
Fixture fixture(const std::string& name, const FixtureParams& params = {});
const std::vector<std::string>& fixture_names();

/// Score of the second edge of the two-path(1, 0) fixture; for any
/// measure satisfying the axioms this recovers its decay constant.
double estimate_decay_factor(const MeasureSpec& spec, const SolverConfig& cfg = {});

}  // namespace edgerank
