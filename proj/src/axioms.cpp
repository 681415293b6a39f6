#include "edgerank/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rng.hpp"

namespace edgerank {

using detail::derive_seed;
using detail::Rng;

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::NodeDeletion: return "node-deletion";
        case Axiom::EdgeDeletion: return "edge-deletion";
        case Axiom::EdgeMultiplication: return "edge-multiplication";
        case Axiom::EdgeSwap: return "edge-swap";
        case Axiom::NodeRedirect: return "node-redirect";
        case Axiom::Baseline: return "baseline";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
    for (Axiom a : all_axioms())
        if (axiom_name(a) == name) return a;
    return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
    static const std::vector<Axiom> axioms = {
        Axiom::NodeDeletion,  Axiom::EdgeDeletion, Axiom::EdgeMultiplication,
        Axiom::EdgeSwap,      Axiom::NodeRedirect, Axiom::Baseline,
    };
    return axioms;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Vacuous: return "vacuous";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string verdict_name(MatrixVerdict v) {
    switch (v) {
        case MatrixVerdict::Satisfied: return "satisfied";
        case MatrixVerdict::Violated: return "violated";
        case MatrixVerdict::Vacuous: return "vacuous";
    }
    return "?";
}

namespace {

AxiomCheckResult skipped(std::string why) {
    AxiomCheckResult r;
    r.status = CheckStatus::Skipped;
    r.note = std::move(why);
    return r;
}

AxiomCheckResult vacuous(std::string why) {
    AxiomCheckResult r;
    r.status = CheckStatus::Vacuous;
    r.note = std::move(why);
    return r;
}

std::optional<EdgeScores> try_score(const MeasureSpec& spec, const Graph& g,
                                    const TrialConfig& cfg, std::string& why) {
    try {
        return score(spec, g, cfg.solver());
    } catch (const MeasureUndefinedError& e) {
        why = e.what();
    } catch (const ConvergenceError& e) {
        why = e.what();
    }
    return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const std::set<NodeId>& nodes) {
    Graph out;
    for (const NodeId& v : nodes) out.nodes[v] = g.nodes.at(v);
    for (const auto& [e, ep] : g.edges)
        if (nodes.count(ep.from) && nodes.count(ep.to)) out.edges.emplace(e, ep);
    return out;
}

// The normalized eigen-style measures have a non-unique fixed point when
// two components tie for the dominant eigenvalue (for Seeley every
// component's operator has eigenvalue 1); such graphs are excluded from
// trials rather than adjudicated.
bool ambiguous_normalization(Measure kind, const Graph& g, const TrialConfig& cfg) {
    if (kind != Measure::Eigenedge && kind != Measure::EdgeSeeley) return false;
    std::vector<double> lambdas;
    int edge_components = 0;
    for (const auto& comp : weak_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edges.empty()) continue;
        ++edge_components;
        if (kind == Measure::Eigenedge) lambdas.push_back(spectral_radius(sub, cfg.solver()));
    }
    if (kind == Measure::EdgeSeeley) return edge_components >= 2;
    if (lambdas.size() <= 1) return false;
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    // near-ties are also excluded: the mass split between two components
    // whose roots differ by less than this window is not numerically
    // resolvable either
    return lambdas[1] >= lambdas[0] - 1e-6 * std::max(1.0, lambdas[0]);
}

std::optional<std::string> class_skip(const MeasureSpec& spec, const Graph& before,
                                      const Graph& after, const TrialConfig& cfg) {
    try {
        if (!in_class(spec, before, cfg.solver()))
            return "input graph outside the measure's admissible class";
        if (&before != &after && !in_class(spec, after, cfg.solver()))
            return "transformed graph outside the measure's admissible class";
        if (ambiguous_normalization(spec.kind, before, cfg))
            return "input graph has tied dominant components (non-unique normalization)";
        if (&before != &after && ambiguous_normalization(spec.kind, after, cfg))
            return "transformed graph has tied dominant components (non-unique normalization)";
    } catch (const ConvergenceError& e) {
        return std::string("class predicate did not converge: ") + e.what();
    }
    return std::nullopt;
}

struct Expected {
    EdgeId edge;
    std::optional<double> value;
};

AxiomCheckResult compare(const Graph& site_graph, std::string transformation,
                         const std::vector<Expected>& expected, const EdgeScores& actual,
                         const TrialConfig& cfg) {
    AxiomCheckResult r;
    std::vector<ScoreDiff> offenders;
    for (const Expected& ex : expected) {
        const std::optional<double>& act = actual.values.at(ex.edge);
        if (!ex.value || !act)
            return skipped("undefined score in comparison set (edge " + ex.edge + ")");
        double diff = std::abs(*ex.value - *act);
        r.max_discrepancy = std::max(r.max_discrepancy, diff);
        if (diff > cfg.tol_check) offenders.push_back({ex.edge, ex.value, act});
    }
    if (!offenders.empty()) {
        r.status = CheckStatus::Fail;
        r.witness = CheckWitness{site_graph, std::move(transformation), std::move(offenders)};
    } else {
        r.status = CheckStatus::Pass;
    }
    return r;
}

}  // namespace

AxiomCheckResult check_node_deletion(const MeasureSpec& spec, const Graph& g, const NodeId& u,
                                     const TrialConfig& cfg) {
    if (classify_node(g, u) != NodeRole::Isolated)
        throw GraphError("node " + u + " is not isolated");
    Graph after = delete_node(g, u);
    if (auto why = class_skip(spec, g, after, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::vector<Expected> expected;
    for (const auto& [e, val] : before_s->values) expected.push_back({e, val});
    return compare(g, "delete isolated node " + u, expected, *after_s, cfg);
}

AxiomCheckResult check_edge_deletion(const MeasureSpec& spec, const Graph& g,
                                     const EdgeId& deleted, const TrialConfig& cfg) {
    Endpoints ep = g.endpoints(deleted);
    std::set<NodeId> reach = successors(g, ep.from);
    reach.insert(ep.from);

    std::vector<EdgeId> comparison;
    for (const auto& [e, eep] : g.edges)
        if (e != deleted && !reach.count(eep.from)) comparison.push_back(e);
    if (comparison.empty())
        return vacuous("every surviving edge starts inside the deleted edge's reach");

    Graph after = delete_edge(g, deleted);
    if (auto why = class_skip(spec, g, after, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::vector<Expected> expected;
    for (const EdgeId& e : comparison) expected.push_back({e, before_s->values.at(e)});
    return compare(g, "delete edge " + deleted, expected, *after_s, cfg);
}

AxiomCheckResult check_edge_multiplication(const MeasureSpec& spec, const Graph& g,
                                           const EdgeId& kept, const TrialConfig& cfg) {
    Endpoints ep = g.endpoints(kept);
    int copies = 0;
    for (const auto& [f, fp] : g.edges) {
        if (fp.from != ep.from) continue;
        if (fp.to != ep.to)
            throw GraphError("edge multiplication precondition violated: out-edge " + f +
                             " of " + ep.from + " does not end at " + ep.to);
        ++copies;
    }
    Graph after = collapse_parallel(g, kept);
    if (auto why = class_skip(spec, g, after, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::vector<Expected> expected;
    for (const auto& [e, eep] : after.edges) {
        std::optional<double> base = before_s->values.at(e);
        if (e == kept)
            expected.push_back({e, base ? std::optional<double>(copies * *base) : base});
        else
            expected.push_back({e, base});
    }
    return compare(g,
                   "collapse " + std::to_string(copies) + " parallel out-edges of " + ep.from +
                       " keeping " + kept,
                   expected, *after_s, cfg);
}

AxiomCheckResult check_edge_swap(const MeasureSpec& spec, const Graph& g, const EdgeId& e1,
                                 const EdgeId& e2, const TrialConfig& cfg) {
    if (!(cfg.tol_pre < cfg.tol_check))
        throw std::invalid_argument(
            "tol_pre must stay below tol_check (separation against false counterexamples)");
    if (e1 == e2) throw GraphError("edge swap needs two distinct edges");
    g.endpoints(e1);
    g.endpoints(e2);
    if (auto why = class_skip(spec, g, g, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    if (!before_s->defined(e1) || !before_s->defined(e2))
        return skipped("undefined score in the swap precondition");
    if (std::abs(before_s->at(e1) - before_s->at(e2)) > cfg.tol_pre)
        return skipped("precondition not met: scores of " + e1 + " and " + e2 + " differ");

    Graph after = swap_ends(g, e1, e2);
    if (auto why2 = class_skip(spec, after, after, cfg)) return skipped(*why2);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::vector<Expected> expected;
    for (const auto& [e, val] : before_s->values) expected.push_back({e, val});
    return compare(g, "swap ends of " + e1 + " and " + e2, expected, *after_s, cfg);
}

AxiomCheckResult check_node_redirect(const MeasureSpec& spec, const Graph& g, const NodeId& u,
                                     const NodeId& w, const TrialConfig& cfg) {
    std::optional<OutTwinWitness> twins = out_twin_witness(g, u, w);
    if (!twins) throw GraphError("nodes " + u + " and " + w + " are not out-twins");

    Graph after = redirect(g, u, w);
    if (auto why = class_skip(spec, g, after, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::map<EdgeId, EdgeId> psi;  // out-edge of w -> matched out-edge of u
    for (const auto& [eu, ew] : twins->pairs) psi[ew] = eu;

    std::vector<Expected> expected;
    for (const auto& [e, eep] : after.edges) {
        std::optional<double> base = before_s->values.at(e);
        auto match = psi.find(e);
        if (match != psi.end()) {
            std::optional<double> twin = before_s->values.at(match->second);
            expected.push_back(
                {e, base && twin ? std::optional<double>(*base + *twin) : std::nullopt});
        } else {
            expected.push_back({e, base});
        }
    }
    return compare(g, "redirect " + u + " into its out-twin " + w, expected, *after_s, cfg);
}

AxiomCheckResult check_baseline(const MeasureSpec& spec, const Graph& g, const EdgeId& e,
                                const TrialConfig& cfg) {
    if (classify_edge(g, e) != EdgeRole::IsolatedEdge)
        throw GraphError("edge " + e + " is not isolated");
    if (auto why = class_skip(spec, g, g, cfg)) return skipped(*why);

    std::string why;
    auto s = try_score(spec, g, cfg, why);
    if (!s) return skipped(why);

    double base_weight = g.weight(g.endpoints(e).from);
    if (!s->defined(e)) {
        // the zero-denominator finding: the axiom's equation cannot hold
        AxiomCheckResult r;
        r.status = CheckStatus::Fail;
        r.note = "undefined score (zero denominator) at an isolated edge";
        r.witness = CheckWitness{g, "baseline at isolated edge " + e,
                                 {{e, base_weight, std::nullopt}}};
        return r;
    }
    return compare(g, "baseline at isolated edge " + e, {{e, base_weight}}, *s, cfg);
}

AxiomCheckResult check_locality(const MeasureSpec& spec, const Graph& g, const Graph& h,
                                const TrialConfig& cfg) {
    Graph sum = graph_sum(g, h);
    if (auto why = class_skip(spec, g, h, cfg)) return skipped(*why);
    if (auto why = class_skip(spec, sum, sum, cfg)) return skipped(*why);

    std::string why;
    auto gs = try_score(spec, g, cfg, why);
    if (!gs) return skipped(why);
    auto hs = try_score(spec, h, cfg, why);
    if (!hs) return skipped(why);
    auto sums = try_score(spec, sum, cfg, why);
    if (!sums) return skipped(why);

    std::vector<Expected> expected;
    for (const auto& [e, val] : gs->values) expected.push_back({e, val});
    for (const auto& [e, val] : hs->values) expected.push_back({e, val});
    return compare(sum, "disjoint sum of two graphs", expected, *sums, cfg);
}

AxiomCheckResult check_sink_weight(const MeasureSpec& spec, const Graph& g, const NodeId& sink,
                                   const TrialConfig& cfg) {
    if (classify_node(g, sink) == NodeRole::Ordinary)
        throw GraphError("node " + sink + " is not a sink");
    Graph after = set_weight(g, sink, 0.0);
    if (auto why = class_skip(spec, g, after, cfg)) return skipped(*why);

    std::string why;
    auto before_s = try_score(spec, g, cfg, why);
    if (!before_s) return skipped(why);
    auto after_s = try_score(spec, after, cfg, why);
    if (!after_s) return skipped(why);

    std::vector<Expected> expected;
    for (const auto& [e, val] : before_s->values) expected.push_back({e, val});
    return compare(g, "zero the weight of sink " + sink, expected, *after_s, cfg);
}

AxiomCheckResult check_source_edge(const MeasureSpec& spec, const Graph& g, const EdgeId& e,
                                   const TrialConfig& cfg) {
    if (classify_edge(g, e) == EdgeRole::Ordinary)
        throw GraphError("edge " + e + " is not a source edge");
    if (auto why = class_skip(spec, g, g, cfg)) return skipped(*why);

    std::string why;
    auto s = try_score(spec, g, cfg, why);
    if (!s) return skipped(why);

    return compare(g, "source edge " + e, {{e, g.weight(g.endpoints(e).from)}}, *s, cfg);
}

// ---- falsification ----------------------------------------------------------

namespace {

using Site = std::function<AxiomCheckResult()>;

void add_node_deletion_sites(std::vector<Site>& sites, const MeasureSpec& spec, const Graph& g,
                             const TrialConfig& cfg, Rng& rng) {
    for (const auto& [v, w] : g.nodes) {
        if (classify_node(g, v) == NodeRole::Isolated) {
            NodeId u = v;
            sites.push_back([=, &g]() { return check_node_deletion(spec, g, u, cfg); });
        }
    }
    // attach a fresh isolated node so the axiom always has a site
    Graph with_iso = g;
    NodeId fresh = fresh_label(with_iso.nodes, "~iso");
    with_iso.nodes[fresh] = rng.real(0.0, cfg.w_max);
    sites.push_back([=]() { return check_node_deletion(spec, with_iso, fresh, cfg); });
}

void add_edge_deletion_sites(std::vector<Site>& sites, const MeasureSpec& spec, const Graph& g,
                             const TrialConfig& cfg) {
    for (const auto& [e, ep] : g.edges) {
        EdgeId deleted = e;
        sites.push_back([=, &g]() { return check_edge_deletion(spec, g, deleted, cfg); });
    }
}

void add_edge_multiplication_sites(std::vector<Site>& sites, const MeasureSpec& spec,
                                   const Graph& g, const TrialConfig& cfg, Rng& rng) {
    for (const auto& [e, ep] : g.edges) {
        bool collapsible = true;
        for (const auto& [f, fp] : g.edges)
            if (fp.from == ep.from && fp.to != ep.to) collapsible = false;
        if (collapsible) {
            EdgeId kept = e;
            sites.push_back([=, &g]() { return check_edge_multiplication(spec, g, kept, cfg); });
        }
    }
    // replicate a few single-out-edge starts so multi-copy sites exist
    int made = 0;
    for (const auto& [e, ep] : g.edges) {
        if (made >= 3) break;
        if (out_degree(g, ep.from) != 1) continue;
        int k = 2 + static_cast<int>(rng.below(2));
        Graph multi = replicate_edge(g, e, k);
        EdgeId kept = e;
        sites.push_back([=]() { return check_edge_multiplication(spec, multi, kept, cfg); });
        ++made;
    }
}

void add_edge_swap_sites(std::vector<Site>& sites, const MeasureSpec& spec, const Graph& g,
                         const TrialConfig& cfg, FalsifyOutcome& out) {
    std::string why;
    auto base = try_score(spec, g, cfg, why);
    if (!base) {
        ++out.sites_skipped;
        return;
    }
    std::vector<EdgeId> ids;
    for (const auto& [e, ep] : g.edges) ids.push_back(e);
    for (size_t i = 0; i < ids.size(); ++i) {
        for (size_t j = i + 1; j < ids.size(); ++j) {
            const auto& a = base->values.at(ids[i]);
            const auto& b = base->values.at(ids[j]);
            if (!a || !b || std::abs(*a - *b) > cfg.tol_pre) continue;
            EdgeId e1 = ids[i], e2 = ids[j];
            sites.push_back([=, &g]() { return check_edge_swap(spec, g, e1, e2, cfg); });
        }
    }
    // constructive pair: a fresh source edge whose start weight is tuned
    // to an existing score, for measures defined on all graphs
    if (admissible_class(spec.kind) == GraphClass::StronglyConnectedComponents) return;
    int made = 0;
    for (const EdgeId& target : ids) {
        if (made >= 2) break;
        const auto& val = base->values.at(target);
        if (!val) continue;
        Graph tuned = g;
        NodeId p = fresh_label(tuned.nodes, "~sw_u");
        tuned.nodes[p] = *val;
        NodeId q = fresh_label(tuned.nodes, "~sw_v");
        tuned.nodes[q] = 0.0;
        EdgeId f = fresh_label(tuned.edges, "~sw_e");
        tuned.edges[f] = Endpoints{p, q};
        sites.push_back([=]() { return check_edge_swap(spec, tuned, f, target, cfg); });
        ++made;
    }
}

void add_node_redirect_sites(std::vector<Site>& sites, const MeasureSpec& spec, const Graph& g,
                             const TrialConfig& cfg, Rng& rng) {
    for (const auto& [u, wu] : g.nodes) {
        for (const auto& [w, ww] : g.nodes) {
            if (u == w) continue;
            if (!out_twin_witness(g, u, w)) continue;
            NodeId a = u, b = w;
            sites.push_back([=, &g]() { return check_node_redirect(spec, g, a, b, cfg); });
        }
    }
    // clone a node's out-edges onto a fresh twin (measures on all graphs
    // only; the clone starts a new non-strongly-connected component)
    if (admissible_class(spec.kind) == GraphClass::StronglyConnectedComponents) return;
    for (const auto& [w, ww] : g.nodes) {
        if (out_degree(g, w) < 1) continue;
        NodeId original = w;
        Graph cloned = g;
        NodeId twin = fresh_label(cloned.nodes, "~nr");
        cloned.nodes[twin] = rng.real(0.0, cfg.w_max);
        int i = 0;
        for (const auto& [e, ep] : g.edges) {
            if (ep.from != original) continue;
            EdgeId copy = fresh_label(cloned.edges, "~nr_e" + std::to_string(i++));
            cloned.edges[copy] = Endpoints{twin, ep.to};
        }
        sites.push_back(
            [=]() { return check_node_redirect(spec, cloned, twin, original, cfg); });
        break;
    }
}

void add_baseline_sites(std::vector<Site>& sites, const MeasureSpec& spec, const Graph& g,
                        const TrialConfig& cfg, Rng& rng) {
    for (const auto& [e, ep] : g.edges) {
        if (classify_edge(g, e) == EdgeRole::IsolatedEdge) {
            EdgeId iso = e;
            sites.push_back([=, &g]() { return check_baseline(spec, g, iso, cfg); });
        }
    }
    Graph with_edge = g;
    NodeId p = fresh_label(with_edge.nodes, "~bl_u");
    with_edge.nodes[p] = rng.real(0.0, cfg.w_max);
    NodeId q = fresh_label(with_edge.nodes, "~bl_v");
    with_edge.nodes[q] = rng.real(0.0, cfg.w_max);
    EdgeId f = fresh_label(with_edge.edges, "~bl_e");
    with_edge.edges[f] = Endpoints{p, q};
    sites.push_back([=]() { return check_baseline(spec, with_edge, f, cfg); });
}

}  // namespace

FalsifyOutcome falsify(const MeasureSpec& spec, Axiom axiom, const TrialConfig& cfg) {
    if (!(cfg.tol_pre < cfg.tol_check))
        throw std::invalid_argument(
            "tol_pre must stay below tol_check (separation against false counterexamples)");
    GraphClass cls = admissible_class(spec.kind);
    FalsifyOutcome out;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        out.trials_run = trial + 1;
        uint64_t trial_seed = derive_seed(cfg.seed, trial);
        Graph g;
        try {
            g = random_graph(cls, cfg, trial_seed, spec.decay);
        } catch (const GraphError&) {
            continue;  // rejection budget exhausted for this seed
        }
        Rng site_rng(derive_seed(trial_seed, 0xA51E5u));

        std::vector<Site> sites;
        switch (axiom) {
            case Axiom::NodeDeletion:
                add_node_deletion_sites(sites, spec, g, cfg, site_rng);
                break;
            case Axiom::EdgeDeletion:
                add_edge_deletion_sites(sites, spec, g, cfg);
                break;
            case Axiom::EdgeMultiplication:
                add_edge_multiplication_sites(sites, spec, g, cfg, site_rng);
                break;
            case Axiom::EdgeSwap:
                add_edge_swap_sites(sites, spec, g, cfg, out);
                break;
            case Axiom::NodeRedirect:
                add_node_redirect_sites(sites, spec, g, cfg, site_rng);
                break;
            case Axiom::Baseline:
                add_baseline_sites(sites, spec, g, cfg, site_rng);
                break;
        }

        for (const Site& site : sites) {
            AxiomCheckResult r = site();
            switch (r.status) {
                case CheckStatus::Pass:
                    ++out.sites_checked;
                    out.max_discrepancy = std::max(out.max_discrepancy, r.max_discrepancy);
                    break;
                case CheckStatus::Fail:
                    ++out.sites_checked;
                    if (r.witness)
                        r.witness->transformation +=
                            " (trial " + std::to_string(trial) + ")";
                    out.counterexample = std::move(r);
                    return out;
                case CheckStatus::Vacuous:
                    ++out.sites_vacuous;
                    break;
                case CheckStatus::Skipped:
                    ++out.sites_skipped;
                    break;
            }
        }
    }
    return out;
}

SatisfactionMatrix satisfaction_matrix(const TrialConfig& cfg, double pagerank_alpha,
                                       double katz_alpha) {
    SatisfactionMatrix matrix;
    matrix.measures = {
        MeasureSpec::pagerank(pagerank_alpha),
        MeasureSpec::eigenedge(),
        MeasureSpec::katz(katz_alpha),
        MeasureSpec::seeley(),
        MeasureSpec::betweenness(),
        MeasureSpec::information(),
        MeasureSpec::gtom(),
    };
    for (const MeasureSpec& spec : matrix.measures) {
        std::vector<MatrixCell> row;
        for (Axiom axiom : all_axioms()) {
            MatrixCell cell{MatrixVerdict::Vacuous, falsify(spec, axiom, cfg)};
            if (cell.outcome.counterexample)
                cell.verdict = MatrixVerdict::Violated;
            else if (cell.outcome.sites_checked > 0)
                cell.verdict = MatrixVerdict::Satisfied;
            row.push_back(std::move(cell));
        }
        matrix.cells.push_back(std::move(row));
    }
    return matrix;
}

}  // namespace edgerank
