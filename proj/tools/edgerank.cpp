#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "edgerank/axioms.hpp"
#include "edgerank/centrality.hpp"
#include "edgerank/json_io.hpp"
#include "edgerank/linegraph.hpp"
#include "edgerank/multigraph.hpp"
#include "edgerank/reporting.hpp"

namespace {

using namespace edgerank;
using nlohmann::json;

// exit codes: 0 success, 1 usage, 2 invalid graph, 3 measure undefined,
// 4 counterexample found
constexpr int kExitUsage = 1;
constexpr int kExitInvalidGraph = 2;
constexpr int kExitMeasureUndefined = 3;
constexpr int kExitCounterexample = 4;

uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("EDGERANK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

MeasureSpec make_spec(const std::string& measure, const std::optional<double>& alpha) {
    std::optional<Measure> kind = measure_from_name(measure);
    if (!kind) throw std::invalid_argument("unknown measure: " + measure);
    bool needs_alpha = *kind == Measure::EdgePageRank || *kind == Measure::EdgeKatz;
    if (needs_alpha && !alpha) throw std::invalid_argument(measure + " needs --alpha");
    if (!needs_alpha && alpha) throw std::invalid_argument(measure + " takes no --alpha");
    return MeasureSpec{*kind, alpha};
}

std::string format2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void print_node_scores(const NodeScores& scores, double alpha, const std::string& format) {
    if (format == "json") {
        json values = json::object();
        for (const auto& [v, x] : scores.values) values[v] = x;
        std::cout << json{{"measure", "node-pagerank"},
                          {"params", {{"alpha", alpha}}},
                          {"values", values}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "node_id,value\n";
        std::cout.precision(17);
        for (const auto& [v, x] : scores.values) std::cout << v << ',' << x << '\n';
    } else {
        size_t width = 0;
        for (const auto& [v, x] : scores.values) width = std::max(width, v.size());
        for (const auto& [v, x] : scores.values)
            std::cout << v << std::string(width - v.size() + 2, ' ') << format2(x) << '\n';
    }
}

void print_edge_scores(const MeasureSpec& spec, const EdgeScores& scores,
                       const std::string& format,
                       const std::map<EdgeId, double>* std_error = nullptr) {
    if (format == "json") {
        json params = json::object();
        if (spec.decay) params["alpha"] = *spec.decay;
        std::cout << scores_to_json(measure_name(spec.kind), params, scores, std_error).dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << scores_to_csv(scores);
    } else {
        std::cout << scores_to_table(scores);
    }
}

struct CheckOptions {
    std::string measure = "pagerank";
    std::optional<double> alpha;
    std::string axiom = "all";
    std::string format = "table";
    TrialConfig trial;
    std::optional<uint64_t> seed;
};

void add_generation_flags(CLI::App* cmd, CheckOptions& opt) {
    cmd->add_option("--seed", opt.seed, "master seed (fallback: EDGERANK_SEED, then 0)");
    cmd->add_option("--n-min", opt.trial.n_min);
    cmd->add_option("--n-max", opt.trial.n_max);
    cmd->add_option("--m-min", opt.trial.m_min);
    cmd->add_option("--m-max", opt.trial.m_max);
    cmd->add_option("--w-max", opt.trial.w_max, "weights drawn uniformly from [0, w-max]");
    cmd->add_flag("--no-self-loops", [&opt](int64_t) { opt.trial.allow_self_loops = false; },
                  "generate graphs without self-loops");
    cmd->add_flag("--no-parallel", [&opt](int64_t) { opt.trial.allow_parallel = false; },
                  "generate graphs without parallel edges");
}

void add_trial_flags(CLI::App* cmd, CheckOptions& opt) {
    cmd->add_option("--trials", opt.trial.trials, "trial budget");
    cmd->add_option("--tol-check", opt.trial.tol_check, "violation threshold");
    cmd->add_option("--tol-pre", opt.trial.tol_pre, "edge-swap equality slack");
    cmd->add_option("--tol-solver", opt.trial.tol_solver, "solver tolerance");
    add_generation_flags(cmd, opt);
}

int run(int argc, char** argv) {
    CLI::App app{"edgerank: edge centrality measures, axiom checks, and line-graph tools\n"
                 "for labeled directed multigraphs (JSON graph documents)"};
    app.require_subcommand(1);

    // compute ----------------------------------------------------------------
    std::string c_measure, c_input, c_format = "table";
    std::optional<double> c_alpha;
    SolverConfig c_cfg;
    bool c_nodes = false;
    CLI::App* compute = app.add_subcommand("compute", "score every edge of a graph");
    compute->add_option("--measure", c_measure,
                        "pagerank|eigenedge|katz|seeley|betweenness|information|gtom")
        ->required();
    compute->add_option("--alpha", c_alpha, "decay factor (pagerank, katz)");
    compute->add_option("--input", c_input, "graph JSON file ('-' for stdin)")->required();
    compute->add_option("--format", c_format)->check(CLI::IsMember({"json", "csv", "table"}));
    compute->add_option("--tol", c_cfg.tolerance, "solver tolerance");
    compute->add_option("--max-iter", c_cfg.max_iterations, "solver iteration budget");
    compute->add_flag("--node-scores", c_nodes, "print node PageRank instead (pagerank only)");

    // rank -------------------------------------------------------------------
    std::string r_measure, r_input, r_node, r_format = "table";
    std::optional<double> r_alpha;
    SolverConfig r_cfg;
    CLI::App* rank = app.add_subcommand("rank", "rank the incoming edges of a node");
    rank->add_option("--incoming", r_node, "target node")->required();
    rank->add_option("--measure", r_measure)->required();
    rank->add_option("--alpha", r_alpha);
    rank->add_option("--input", r_input)->required();
    rank->add_option("--format", r_format)->check(CLI::IsMember({"json", "csv", "table"}));
    rank->add_option("--tol", r_cfg.tolerance);
    rank->add_option("--max-iter", r_cfg.max_iterations);

    // surf -------------------------------------------------------------------
    std::string s_input, s_format = "table";
    double s_alpha = 0.9;
    long long s_walks = 1000000;
    std::optional<uint64_t> s_seed;
    CLI::App* surf = app.add_subcommand("surf", "Monte-Carlo random-surfer estimate");
    surf->add_option("--alpha", s_alpha, "continuation probability")->required();
    surf->add_option("--walks", s_walks);
    surf->add_option("--seed", s_seed);
    surf->add_option("--input", s_input)->required();
    surf->add_option("--format", s_format)->check(CLI::IsMember({"json", "csv", "table"}));

    // check ------------------------------------------------------------------
    CheckOptions k;
    CLI::App* check = app.add_subcommand("check", "randomized axiom check for one measure");
    check->add_option("--measure", k.measure)->required();
    check->add_option("--alpha", k.alpha);
    check->add_option("--axiom", k.axiom,
                      "node-deletion|edge-deletion|edge-multiplication|edge-swap|"
                      "node-redirect|baseline|all");
    check->add_option("--format", k.format)->check(CLI::IsMember({"json", "table"}));
    add_trial_flags(check, k);

    // matrix -----------------------------------------------------------------
    CheckOptions x;
    double x_pagerank_alpha = 0.9, x_katz_alpha = 0.3;
    CLI::App* matrix = app.add_subcommand("matrix", "7x6 measure/axiom satisfaction table");
    matrix->add_option("--format", x.format)->check(CLI::IsMember({"json", "table"}));
    matrix->add_option("--pagerank-alpha", x_pagerank_alpha);
    matrix->add_option("--katz-alpha", x_katz_alpha);
    add_trial_flags(matrix, x);

    // linegraph ---------------------------------------------------------------
    std::string l_input, l_provenance;
    CLI::App* lg = app.add_subcommand("linegraph", "emit the line digraph of a graph");
    lg->add_option("--input", l_input)->required();
    lg->add_option("--provenance", l_provenance,
                   "write the {arc: [edge, edge]} sidecar to this file");

    // heuchenne ---------------------------------------------------------------
    std::string h_input;
    CLI::App* heuchenne = app.add_subcommand(
        "heuchenne", "closure-condition check: witnesses that a graph is no line digraph");
    heuchenne->add_option("--input", h_input)->required();

    // fixture -----------------------------------------------------------------
    std::string f_name;
    FixtureParams f_params;
    CLI::App* fix = app.add_subcommand("fixture", "materialize a named construction graph");
    fix->add_option("--name", f_name)->required();
    fix->add_option("--x", f_params.x);
    fix->add_option("--y", f_params.y);
    fix->add_option("--k", f_params.k);
    fix->add_option("--alpha", f_params.a);

    // gen ---------------------------------------------------------------------
    CheckOptions g_opt;
    std::string g_class = "all";
    std::optional<double> g_alpha;
    CLI::App* gen = app.add_subcommand("gen", "emit a random multigraph for a class");
    gen->add_option("--class", g_class)
        ->check(CLI::IsMember({"all", "strongly-connected", "katz"}));
    gen->add_option("--alpha", g_alpha, "decay bound for the katz class");
    add_generation_flags(gen, g_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    if (app.got_subcommand(compute)) {
        Graph g = load_graph_file(c_input);
        if (c_nodes) {
            if (c_measure != "pagerank")
                throw std::invalid_argument("--node-scores is only defined for pagerank");
            if (!c_alpha) throw std::invalid_argument("pagerank needs --alpha");
            print_node_scores(node_pagerank(g, *c_alpha, c_cfg), *c_alpha, c_format);
            return 0;
        }
        MeasureSpec spec = make_spec(c_measure, c_alpha);
        print_edge_scores(spec, score(spec, g, c_cfg), c_format);
        return 0;
    }

    if (app.got_subcommand(rank)) {
        Graph g = load_graph_file(r_input);
        MeasureSpec spec = make_spec(r_measure, r_alpha);
        auto ranked = rank_incoming(g, r_node, spec, r_cfg);
        if (r_format == "json") {
            json rows = json::array();
            for (const auto& [e, v] : ranked)
                rows.push_back({{"edge", e}, {"value", v ? json(*v) : json("undefined")}});
            std::cout << rows.dump(2) << "\n";
        } else if (r_format == "csv") {
            std::cout << "edge_id,value\n";
            std::cout.precision(17);
            for (const auto& [e, v] : ranked) {
                std::cout << e << ',';
                if (v)
                    std::cout << *v;
                else
                    std::cout << "undefined";
                std::cout << '\n';
            }
        } else {
            for (const auto& [e, v] : ranked)
                std::cout << e << "  " << (v ? format2(*v) : "undefined") << '\n';
        }
        return 0;
    }

    if (app.got_subcommand(surf)) {
        Graph g = load_graph_file(s_input);
        SurferResult result = random_surfer_detailed(g, s_alpha, s_walks, resolve_seed(s_seed));
        MeasureSpec spec{Measure::EdgePageRank, s_alpha};
        if (s_format == "table") {
            size_t width = 0;
            for (const auto& [e, v] : result.scores.values) width = std::max(width, e.size());
            for (const auto& [e, v] : result.scores.values)
                std::cout << e << std::string(width - e.size() + 2, ' ') << format2(*v)
                          << "  (se " << format2(result.std_error.at(e)) << ")\n";
        } else {
            print_edge_scores(spec, result.scores, s_format, &result.std_error);
        }
        return 0;
    }

    if (app.got_subcommand(check)) {
        MeasureSpec spec = make_spec(k.measure, k.alpha);
        k.trial.seed = resolve_seed(k.seed);
        std::vector<Axiom> axioms;
        if (k.axiom == "all") {
            axioms = all_axioms();
        } else {
            std::optional<Axiom> a = axiom_from_name(k.axiom);
            if (!a) throw std::invalid_argument("unknown axiom: " + k.axiom);
            axioms.push_back(*a);
        }
        bool found = false;
        json reports = json::array();
        for (Axiom a : axioms) {
            FalsifyOutcome outcome = falsify(spec, a, k.trial);
            found |= outcome.counterexample.has_value();
            if (k.format == "json")
                reports.push_back(check_report_to_json(spec, a, outcome));
            else
                std::cout << check_report_to_line(spec, a, outcome) << "\n";
        }
        if (k.format == "json") std::cout << reports.dump(2) << "\n";
        return found ? kExitCounterexample : 0;
    }

    if (app.got_subcommand(matrix)) {
        x.trial.seed = resolve_seed(x.seed);
        SatisfactionMatrix table = satisfaction_matrix(x.trial, x_pagerank_alpha, x_katz_alpha);
        if (x.format == "json")
            std::cout << matrix_to_json(table).dump(2) << "\n";
        else
            std::cout << matrix_to_table(table);
        bool violated = false;
        for (const auto& row : table.cells)
            for (const MatrixCell& cell : row) violated |= cell.verdict == MatrixVerdict::Violated;
        return violated ? kExitCounterexample : 0;
    }

    if (app.got_subcommand(lg)) {
        Graph g = load_graph_file(l_input);
        LineGraphResult result = line_graph(g);
        std::cout << graph_to_json(result.graph).dump(2) << "\n";
        if (!l_provenance.empty()) {
            json side = json::object();
            for (const auto& [arc, pair] : result.provenance)
                side[arc] = json::array({pair.first, pair.second});
            std::ofstream out(l_provenance);
            if (!out) throw GraphError("cannot write provenance file: " + l_provenance);
            out << side.dump(2) << "\n";
        }
        return 0;
    }

    if (app.got_subcommand(heuchenne)) {
        Graph g = load_graph_file(h_input);
        std::vector<HeuchenneWitness> witnesses = heuchenne_witnesses(g);
        if (witnesses.empty()) {
            std::cout << "ok\n";
        } else {
            for (const HeuchenneWitness& w : witnesses)
                std::cout << "witness a=" << w.a << " c=" << w.c << " b=" << w.b
                          << " d=" << w.d << "\n";
        }
        return 0;
    }

    if (app.got_subcommand(fix)) {
        Fixture f = fixture(f_name, f_params);
        std::cout << graph_to_json(f.graph).dump(2) << "\n";
        return 0;
    }

    if (app.got_subcommand(gen)) {
        g_opt.trial.seed = resolve_seed(g_opt.seed);
        GraphClass cls = GraphClass::All;
        if (g_class == "strongly-connected") cls = GraphClass::StronglyConnectedComponents;
        if (g_class == "katz") {
            cls = GraphClass::KatzAdmissible;
            if (!g_alpha) throw std::invalid_argument("katz class needs --alpha");
        }
        Graph g = random_graph(cls, g_opt.trial, g_opt.trial.seed, g_alpha);
        std::cout << graph_to_json(g).dump(2) << "\n";
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const edgerank::MeasureUndefinedError& e) {
        std::cerr << "error: measure-undefined: " << e.what() << "\n";
        return kExitMeasureUndefined;
    } catch (const edgerank::ConvergenceError& e) {
        std::cerr << "error: no-convergence: " << e.what() << "\n";
        return kExitMeasureUndefined;
    } catch (const edgerank::GraphError& e) {
        std::cerr << "error: invalid-graph: " << e.what() << "\n";
        return kExitInvalidGraph;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitUsage;
    }
}
