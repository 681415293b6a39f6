// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgerank/axioms.hpp"
#include "edgerank/centrality.hpp"
#include "edgerank/json_io.hpp"
#include "edgerank/linegraph.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"

using namespace edgerank;
using nlohmann::json;

namespace {

int failures = 0;
std::vector<std::string> details;

void detail(const std::string& line) { details.push_back(line); }

void report(int number, const std::string& name, bool ok, const std::string& info) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                info.c_str());
    if (!ok) {
        ++failures;
        for (const std::string& line : details) std::printf("       %s\n", line.c_str());
    }
    details.clear();
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: Example-1 reproduction through the CLI -------------------

void criterion1() {
    Graph fig1 = fixture("fig1").graph;
    std::string file = testutil::write_temp("acc_fig1.json", graph_to_json(fig1).dump());

    auto start = std::chrono::steady_clock::now();
    testutil::CmdResult r = testutil::run({EDGERANK_CLI_PATH, "compute", "--measure",
                                           "pagerank", "--alpha", "0.9", "--input", file,
                                           "--format", "json"});
    double elapsed = seconds_since(start);

    bool ok = r.exit_code == 0 && elapsed < 1.0;
    if (!ok) detail("compute exited " + std::to_string(r.exit_code));
    std::map<EdgeId, double> edge_table{{"e2", 3.55}, {"e3", 6.80}, {"e7", 3.22}};
    if (r.exit_code == 0) {
        json doc = json::parse(r.out);
        for (const auto& [e, want] : edge_table) {
            double got = doc["values"][e].get<double>();
            if (std::abs(got - want) > 0.005) {
                ok = false;
                detail("edge " + e + ": got " + std::to_string(got));
            }
        }
    }
    NodeScores npr = node_pagerank(fig1, 0.9);
    std::map<NodeId, double> node_table{{"v1", 7.09}, {"v2", 6.80}, {"v3", 12.89}};
    for (const auto& [v, want] : node_table) {
        if (std::abs(npr.values.at(v) - want) > 0.005) {
            ok = false;
            detail("node " + v + ": got " + std::to_string(npr.values.at(v)));
        }
    }
    char info[96];
    std::snprintf(info, sizeof info, "edge e2/e3/e7 and node v1/v2/v3 within 0.005; %.3f s",
                  elapsed);
    report(1, "Example-1 reproduction", ok, info);
}

// ---- criterion 2: recursion residual on 1000 random multigraphs -------------

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    TrialConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 20;
    cfg.m_min = 1;
    cfg.m_max = 60;
    SolverConfig solver;

    bool ok = true;
    double worst_residual = 0.0, worst_relation = 0.0;
    for (uint64_t seed = 0; seed < 1000 && ok; ++seed) {
        Graph g = random_graph(GraphClass::All, cfg, seed);
        for (double a : {0.1, 0.5, 0.9}) {
            EdgeScores pr = edge_pagerank(g, a, solver);
            NodeScores npr = node_pagerank(g, a, solver);
            std::map<NodeId, double> in_sum;
            for (const auto& [e, ep] : g.edges) in_sum[ep.to] += pr.at(e);
            std::map<NodeId, int> outdeg;
            for (const auto& [e, ep] : g.edges) ++outdeg[ep.from];
            for (const auto& [e, ep] : g.edges) {
                double residual = std::abs(pr.at(e) * outdeg[ep.from] -
                                           a * in_sum[ep.from] - g.weight(ep.from));
                double relation =
                    std::abs(pr.at(e) - npr.values.at(ep.from) / outdeg[ep.from]);
                worst_residual = std::max(worst_residual, residual);
                worst_relation = std::max(worst_relation, relation);
            }
        }
        if (worst_residual > 1e-9 || worst_relation > 1e-9) ok = false;
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0) ok = false;
    char info[128];
    std::snprintf(info, sizeof info,
                  "1000 graphs x a in {0.1,0.5,0.9}; max residual %.2e, max relation gap %.2e; "
                  "%.1f s",
                  worst_residual, worst_relation, elapsed);
    report(2, "recursion residual and node/edge relation", ok, info);
}

// ---- criterion 3: closed-form fixtures -----------------------------------------

void criterion3() {
    SolverConfig solver{1e-13, 400000};
    std::mt19937_64 eng(2024);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * ((eng() >> 11) * 0x1.0p-53);
    };

    bool ok = true;
    double worst = 0.0;
    for (double a : {0.0, 0.5, 0.99}) {
        for (int i = 0; i < 20; ++i) {
            FixtureParams p;
            p.x = uniform(0.0, 10.0);
            p.y = uniform(0.0, 10.0);
            p.k = 1 + static_cast<int>(eng() % 6);
            p.a = a;
            for (const char* name : {"two-path", "self-loop", "swap-pair", "star", "star-edge"}) {
                Fixture f = fixture(name, p);
                EdgeScores pr = edge_pagerank(f.graph, a, solver);
                for (const auto& [e, want] : f.expected) {
                    double diff = std::abs(pr.at(e) - want);
                    worst = std::max(worst, diff);
                    if (diff > 1e-9) {
                        ok = false;
                        detail(std::string(name) + " edge " + e + " off by " +
                               std::to_string(diff));
                    }
                }
            }
        }
    }

    double worst_decay = 0.0;
    for (double a : {0.0, 0.5, 0.99}) {
        // the unit-weight self-loop pins the closed form exactly
        Fixture loop = fixture("self-loop", {1.0, 0.0, 1, a});
        double got = edge_pagerank(loop.graph, a, solver).at("e1");
        if (std::abs(got - 1.0 / (1.0 - a)) > 1e-9) {
            ok = false;
            detail("unit self-loop at a=" + std::to_string(a));
        }
        double est = estimate_decay_factor(MeasureSpec::pagerank(a), solver);
        worst_decay = std::max(worst_decay, std::abs(est - a));
    }
    if (worst_decay > 1e-10) {
        ok = false;
        detail("decay recovery off by " + std::to_string(worst_decay));
    }
    char info[128];
    std::snprintf(info, sizeof info,
                  "two-path/self-loop/swap-pair/star/star-edge within %.1e; decay factor "
                  "recovered within %.1e",
                  worst, worst_decay);
    report(3, "closed-form fixtures", ok, info);
}

// ---- criterion 4: full axiom sweep for edge PageRank ---------------------------

void criterion4() {
    MeasureSpec pr = MeasureSpec::pagerank(0.9);
    TrialConfig cfg;
    cfg.trials = 500;
    cfg.seed = 20240;
    cfg.tol_check = 1e-8;

    bool ok = true;
    double worst = 0.0;
    long long sites = 0;
    for (Axiom axiom : all_axioms()) {
        FalsifyOutcome out = falsify(pr, axiom, cfg);
        sites += out.sites_checked;
        worst = std::max(worst, out.max_discrepancy);
        if (out.counterexample) {
            ok = false;
            detail(axiom_name(axiom) + ": unexpected counterexample");
        }
        if (out.sites_checked == 0) {
            ok = false;
            detail(axiom_name(axiom) + ": no sites checked");
        }
    }

    // derived properties of the axioms at the same tolerance
    TrialConfig gen;
    gen.seed = 999;
    int derived_sites = 0;
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_graph(GraphClass::All, gen, seed);
        Graph h;
        {
            Graph raw = random_graph(GraphClass::All, gen, seed + 70000);
            for (const auto& [v, w] : raw.nodes) h.nodes["h_" + v] = w;
            for (const auto& [e, ep] : raw.edges)
                h.edges["h_" + e] = Endpoints{"h_" + ep.from, "h_" + ep.to};
        }
        AxiomCheckResult loc = check_locality(pr, g, h, cfg);
        worst = std::max(worst, loc.max_discrepancy);
        if (loc.status != CheckStatus::Pass) ok = false;
        ++derived_sites;

        for (const auto& [v, w] : g.nodes) {
            if (classify_node(g, v) == NodeRole::Ordinary) continue;
            AxiomCheckResult sw = check_sink_weight(pr, g, v, cfg);
            worst = std::max(worst, sw.max_discrepancy);
            if (sw.status != CheckStatus::Pass) ok = false;
            ++derived_sites;
        }
        for (const auto& [e, ep] : g.edges) {
            if (classify_edge(g, e) == EdgeRole::Ordinary) continue;
            AxiomCheckResult se = check_source_edge(pr, g, e, cfg);
            worst = std::max(worst, se.max_discrepancy);
            if (se.status != CheckStatus::Pass) ok = false;
            ++derived_sites;
        }
    }
    if (worst > 1e-8) ok = false;

    // the same run through the command-line surface
    testutil::CmdResult cli =
        testutil::run({EDGERANK_CLI_PATH, "check", "--measure", "pagerank", "--alpha", "0.9",
                       "--axiom", "all", "--trials", "500", "--seed", "42"});
    if (cli.exit_code != 0) {
        ok = false;
        detail("CLI check exited " + std::to_string(cli.exit_code));
    }
    char info[160];
    std::snprintf(info, sizeof info,
                  "six axioms x 500 trials (%lld sites) plus %d locality/sink-weight/"
                  "source-edge sites; max discrepancy %.2e; CLI check exit 0",
                  sites, derived_sites, worst);
    report(4, "edge PageRank passes every axiom at every site", ok, info);
}

// ---- criterion 5: line-graph equivalence -------------------------------------

void criterion5() {
    SolverConfig solver;
    bool ok = true;
    double worst = 0.0;

    TrialConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 15;
    cfg.m_min = 1;
    cfg.m_max = 45;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(GraphClass::All, cfg, seed);
        for (double a : {0.3, 0.9})
            worst = std::max(worst,
                             pagerank_linegraph_equivalence(g, a, solver).max_discrepancy);
    }
    for (const char* name : {"fig1", "fig5"}) {
        Graph g = fixture(name).graph;
        for (double a : {0.3, 0.9})
            worst = std::max(worst,
                             pagerank_linegraph_equivalence(g, a, solver).max_discrepancy);
    }
    if (worst > 1e-9) {
        ok = false;
        detail("max equivalence discrepancy " + std::to_string(worst));
    }

    std::vector<HeuchenneWitness> swapped = heuchenne_witnesses(fixture("fig5-swapped").graph);
    HeuchenneWitness documented{"e1", "e3", "e6", "e8"};
    bool found = false;
    for (const HeuchenneWitness& w : swapped) found |= w == documented;
    if (!found) {
        ok = false;
        detail("documented witness (a=e1,c=e6,b=e3,d=e8) not found");
    }
    if (!heuchenne_witnesses(line_graph(fixture("fig5").graph).graph).empty()) {
        ok = false;
        detail("closure violation reported on an actual line graph");
    }
    char info[128];
    std::snprintf(info, sizeof info,
                  "200 random graphs + fixtures: max |node PR(L(G)) - edge PR(G)| = %.2e; "
                  "witness found on swapped graph only",
                  worst);
    report(5, "line-graph equivalence and closure witness", ok, info);
}

// ---- criterion 6: satisfaction matrix vs the expected verdicts ----------------

void criterion6() {
    auto start = std::chrono::steady_clock::now();
    struct Pair {
        MeasureSpec spec;
        Axiom axiom;
        bool violated;  // expected verdict
    };
    const MeasureSpec pagerank = MeasureSpec::pagerank(0.9);
    const MeasureSpec eigen = MeasureSpec::eigenedge();
    const MeasureSpec katz = MeasureSpec::katz(0.3);
    const MeasureSpec seeley = MeasureSpec::seeley();
    const MeasureSpec betw = MeasureSpec::betweenness();
    const MeasureSpec info_c = MeasureSpec::information();
    const MeasureSpec gt = MeasureSpec::gtom();

    std::vector<Pair> pairs;
    for (Axiom a : all_axioms()) pairs.push_back({pagerank, a, false});
    for (Axiom a : all_axioms()) pairs.push_back({seeley, a, false});
    for (Axiom a : all_axioms()) pairs.push_back({eigen, a, a == Axiom::EdgeMultiplication});
    for (Axiom a : all_axioms()) pairs.push_back({katz, a, a == Axiom::EdgeMultiplication});
    for (Axiom a : all_axioms()) pairs.push_back({betw, a, a != Axiom::NodeDeletion});
    for (Axiom a : all_axioms()) pairs.push_back({gt, a, a != Axiom::NodeDeletion});
    for (Axiom a : all_axioms())
        pairs.push_back({info_c, a,
                         a == Axiom::EdgeMultiplication || a == Axiom::EdgeSwap ||
                             a == Axiom::NodeRedirect});

    bool ok = true;
    int found_violations = 0, clean_satisfactions = 0;
    for (const Pair& p : pairs) {
        TrialConfig cfg;
        cfg.seed = 606060;
        cfg.trials = p.violated ? 10000 : 1000;
        FalsifyOutcome out = falsify(p.spec, p.axiom, cfg);
        std::string label = measure_name(p.spec.kind) + " x " + axiom_name(p.axiom);
        if (p.violated) {
            if (out.counterexample) {
                ++found_violations;
            } else {
                ok = false;
                detail(label + ": expected a counterexample, none in " +
                       std::to_string(out.trials_run) + " trials");
            }
        } else {
            if (out.counterexample) {
                ok = false;
                std::string site = out.counterexample->witness
                                       ? out.counterexample->witness->transformation
                                       : out.counterexample->note;
                detail(label + ": unexpected counterexample at " + site);
            } else {
                ++clean_satisfactions;
            }
        }
    }
    char info[160];
    std::snprintf(info, sizeof info,
                  "%d/15 expected violations found within 1e4 trials; %d/27 claimed "
                  "satisfactions clean in 1e3 trials; %.1f s",
                  found_violations, clean_satisfactions, seconds_since(start));
    report(6, "satisfaction matrix matches the narrative", ok, info);
}

// ---- criterion 7: Monte-Carlo consistency -------------------------------------

void criterion7() {
    Graph fig1 = fixture("fig1").graph;
    EdgeScores exact = edge_pagerank(fig1, 0.9);
    SurferResult est = random_surfer_detailed(fig1, 0.9, 1000000, 4242);
    SurferResult rerun = random_surfer_detailed(fig1, 0.9, 1000000, 4242);

    bool ok = true;
    double worst_rel = 0.0;
    for (const auto& [e, v] : exact.values) {
        double rel = std::abs(est.scores.at(e) - *v) / *v;
        worst_rel = std::max(worst_rel, rel);
        if (rel > 0.02) {
            ok = false;
            detail("edge " + e + " off by " + std::to_string(100 * rel) + "%");
        }
        if (est.scores.at(e) != rerun.scores.at(e)) {
            ok = false;
            detail("rerun with the same seed diverged on " + e);
        }
    }
    char info[96];
    std::snprintf(info, sizeof info,
                  "1e6 walks at a=0.9: worst relative error %.2f%%; reruns identical",
                  100 * worst_rel);
    report(7, "Monte-Carlo surfer consistency", ok, info);
}

// ---- criterion 8: brute-force oracle equivalence -------------------------------

void criterion8() {
    TrialConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 6;
    cfg.m_min = 1;
    cfg.m_max = 10;

    bool ok = true;
    for (uint64_t seed = 0; seed < 500; ++seed) {
        Graph g = random_graph(GraphClass::All, cfg, seed);
        EdgeScores got = edge_betweenness(g);
        std::map<EdgeId, double> want = oracle::betweenness_bruteforce(g);
        for (const auto& [e, v] : want) {
            if (got.at(e) != v) {
                ok = false;
                detail("betweenness mismatch on seed " + std::to_string(seed) + " edge " + e);
            }
        }
        EdgeScores got_g = gtom(g);
        auto want_g = oracle::gtom_oracle(g);
        for (const auto& [e, v] : want_g) {
            bool same = got_g.values.at(e).has_value() == v.has_value() &&
                        (!v || *got_g.values.at(e) == *v);
            if (!same) {
                ok = false;
                detail("gtom mismatch on seed " + std::to_string(seed) + " edge " + e);
            }
        }
    }
    report(8, "betweenness and GTOM match brute-force enumeration exactly", ok,
           "500 instances with n<=6, m<=10, bitwise agreement");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
