#include <stdexcept>

#include "edgerank/axioms.hpp"
#include "edgerank/linegraph.hpp"

namespace edgerank {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("bad fixture parameters: " + what);
}

Graph fig1_graph() {
    return make_graph(
        {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}},
        {{"e1", {"v1", "v1"}},
         {"e2", {"v1", "v4"}},
         {"e3", {"v2", "v4"}},
         {"e4", {"v3", "v1"}},
         {"e5", {"v3", "v2"}},
         {"e6", {"v3", "v2"}},
         {"e7", {"v3", "v4"}},
         {"e8", {"v4", "v3"}}});
}

Graph fig5_graph() {
    return make_graph(
        {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1},
         {"v6", 1}, {"v7", 1}, {"v8", 1}, {"v9", 1}, {"v10", 1}},
        {{"e0", {"v1", "v2"}},
         {"e1", {"v10", "v3"}},
         {"e2", {"v2", "v3"}},
         {"e3", {"v2", "v4"}},
         {"e4", {"v8", "v4"}},
         {"e5", {"v3", "v9"}},
         {"e6", {"v3", "v7"}},
         {"e7", {"v4", "v5"}},
         {"e8", {"v4", "v6"}}});
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "two-path", "self-loop", "swap-pair", "star",
        "star-edge", "fig1",      "fig5",      "fig5-swapped"};
    return names;
}

Fixture fixture(const std::string& name, const FixtureParams& p) {
    Fixture f;
    f.name = name;
    if (name == "two-path") {
        require(p.x >= 0 && p.y >= 0, "x, y must be >= 0");
        f.graph = make_graph({{"u", p.x}, {"v", p.y}, {"w", 0}},
                             {{"e1", {"u", "v"}}, {"e2", {"v", "w"}}});
        f.expected = {{"e1", p.x}, {"e2", p.a * p.x + p.y}};
    } else if (name == "self-loop") {
        require(p.x >= 0, "x must be >= 0");
        require(p.a >= 0 && p.a < 1, "a must be in [0,1)");
        f.graph = make_graph({{"v", p.x}}, {{"e1", {"v", "v"}}});
        f.expected = {{"e1", p.x / (1.0 - p.a)}};
    } else if (name == "swap-pair") {
        // source edge tuned so both edges score 1/(1-a); swapping their
        // ends must then change nothing
        require(p.a >= 0 && p.a < 1, "a must be in [0,1)");
        double x = 1.0 / (1.0 - p.a);
        f.graph = make_graph({{"u", x}, {"v", 1}, {"w", 0}},
                             {{"e1", {"u", "w"}}, {"e2", {"v", "v"}}});
        f.expected = {{"e1", x}, {"e2", x}};
    } else if (name == "star") {
        require(p.x >= 0, "x must be >= 0");
        require(p.k >= 1, "k must be >= 1");
        std::vector<std::pair<NodeId, double>> nodes{{"v", p.x}};
        std::vector<std::pair<EdgeId, Endpoints>> edges;
        for (int i = 1; i <= p.k; ++i) {
            std::string w = "w" + std::to_string(i);
            nodes.emplace_back(w, 0.0);
            edges.push_back({"e" + std::to_string(i), {"v", w}});
            f.expected["e" + std::to_string(i)] = p.x / p.k;
        }
        f.graph = make_graph(nodes, edges);
    } else if (name == "star-edge") {
        require(p.x >= 0 && p.y >= 0, "x, y must be >= 0");
        require(p.k >= 1, "k must be >= 1");
        std::vector<std::pair<NodeId, double>> nodes{{"u", p.x}, {"v", p.y}};
        std::vector<std::pair<EdgeId, Endpoints>> edges{{"e", {"u", "v"}}};
        f.expected["e"] = p.x;
        for (int i = 1; i <= p.k; ++i) {
            std::string w = "w" + std::to_string(i);
            nodes.emplace_back(w, 0.0);
            edges.push_back({"e" + std::to_string(i), {"v", w}});
            f.expected["e" + std::to_string(i)] = (p.a * p.x + p.y) / p.k;
        }
        f.graph = make_graph(nodes, edges);
    } else if (name == "fig1") {
        f.graph = fig1_graph();
    } else if (name == "fig5") {
        f.graph = fig5_graph();
    } else if (name == "fig5-swapped") {
        // line graph of fig5 with the ends of two symmetric arcs
        // exchanged; the result is no longer a line graph of anything
        Graph lg = line_graph(fig5_graph()).graph;
        f.graph = swap_ends(lg, "e2->e6", "e3->e7");
    } else {
        throw std::invalid_argument("unknown fixture: " + name);
    }
    return f;
}

double estimate_decay_factor(const MeasureSpec& spec, const SolverConfig& cfg) {
    Fixture f = fixture("two-path", FixtureParams{1.0, 0.0, 1, 0.0});
    EdgeScores s = score(spec, f.graph, cfg);
    return s.at("e2");
}

}  // namespace edgerank
