#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edgerank/axioms.hpp"
#include "edgerank/linegraph.hpp"

using namespace edgerank;

namespace {

bool has_arc(const Graph& g, const NodeId& from, const NodeId& to) {
    for (const auto& [e, ep] : g.edges)
        if (ep.from == from && ep.to == to) return true;
    return false;
}

}  // namespace

TEST_CASE("line graph of the nine-edge example graph") {
    Graph g = fixture("fig5").graph;
    LineGraphResult lg = line_graph(g);

    // nodes of L(G) are the edges of G
    REQUIRE(lg.graph.nodes.size() == 9);
    for (const auto& [e, ep] : g.edges) CHECK(lg.graph.has_node(e));

    // exactly the expected adjacency arcs
    std::vector<std::pair<NodeId, NodeId>> expected = {
        {"e0", "e2"}, {"e0", "e3"}, {"e1", "e5"}, {"e1", "e6"}, {"e2", "e5"},
        {"e2", "e6"}, {"e3", "e7"}, {"e3", "e8"}, {"e4", "e7"}, {"e4", "e8"}};
    CHECK(lg.graph.edges.size() == expected.size());
    for (const auto& [a, b] : expected) CHECK(has_arc(lg.graph, a, b));

    // node weight is b(start)/outdeg(start): v2 has two out-edges
    CHECK(lg.graph.weight("e2") == doctest::Approx(0.5));
    CHECK(lg.graph.weight("e0") == doctest::Approx(1.0));

    // provenance records the encoded adjacency pair
    CHECK(lg.provenance.at("e0->e2") == std::make_pair(EdgeId("e0"), EdgeId("e2")));
}

TEST_CASE("line graph small cases") {
    Graph iso = make_graph({{"u", 2.5}, {"v", 0}}, {{"e", {"u", "v"}}});
    LineGraphResult lg = line_graph(iso);
    CHECK(lg.graph.nodes.size() == 1);
    CHECK(lg.graph.edges.empty());
    CHECK(lg.graph.weight("e") == 2.5);

    Graph loop = make_graph({{"v", 1}}, {{"e", {"v", "v"}}});
    LineGraphResult lgl = line_graph(loop);
    CHECK(lgl.graph.weight("e") == 1.0);
    REQUIRE(lgl.graph.edges.size() == 1);
    CHECK(lgl.graph.edges.begin()->second == Endpoints{"e", "e"});
}

TEST_CASE("line graph invariants on random graphs") {
    TrialConfig cfg;
    cfg.n_max = 8;
    cfg.m_max = 16;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(GraphClass::All, cfg, seed);
        LineGraphResult lg = line_graph(g);
        CHECK(!validate(lg.graph));

        // total weight of L(G): each non-sink's weight split over its out-edges
        double expected_weight = 0.0;
        for (const auto& [v, w] : g.nodes)
            if (out_degree(g, v) > 0) expected_weight += w;
        double total = 0.0;
        for (const auto& [v, w] : lg.graph.nodes) total += w;
        CHECK(total == doctest::Approx(expected_weight).epsilon(1e-9));

        // arc count: sum over nodes of indeg * outdeg
        long long arcs = 0;
        for (const auto& [v, w] : g.nodes)
            arcs += static_cast<long long>(in_degree(g, v)) * out_degree(g, v);
        CHECK(static_cast<long long>(lg.graph.edges.size()) == arcs);

        // line digraphs satisfy the closure condition
        CHECK(heuchenne_witnesses(lg.graph).empty());
    }
}

TEST_CASE("pagerank transfers to the line graph exactly") {
    SolverConfig cfg;
    for (const char* name : {"fig1", "fig5"}) {
        Graph g = fixture(name).graph;
        for (double a : {0.3, 0.9}) {
            EquivalenceReport r = pagerank_linegraph_equivalence(g, a, cfg);
            CHECK(r.max_discrepancy <= 1e-9);
        }
    }

    Graph iso = make_graph({{"u", 3.0}, {"v", 1.0}}, {{"e", {"u", "v"}}});
    CHECK(pagerank_linegraph_equivalence(iso, 0.9, cfg).max_discrepancy <= 1e-12);

    TrialConfig trials;
    trials.n_max = 8;
    trials.m_max = 20;
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_graph(GraphClass::All, trials, seed);
        for (double a : {0.3, 0.9})
            CHECK(pagerank_linegraph_equivalence(g, a, cfg).max_discrepancy <= 1e-9);
    }
}

TEST_CASE("the swapped line graph stops being a line graph") {
    Graph base = fixture("fig5").graph;
    CHECK(heuchenne_witnesses(line_graph(base).graph).empty());

    Graph swapped = fixture("fig5-swapped").graph;
    std::vector<HeuchenneWitness> witnesses = heuchenne_witnesses(swapped);
    CHECK(!witnesses.empty());
    // the documented witness: arcs (e1,e6), (e3,e6), (e3,e8) present, (e1,e8) absent
    HeuchenneWitness expected{"e1", "e3", "e6", "e8"};
    bool found = false;
    for (const HeuchenneWitness& w : witnesses) found |= w == expected;
    CHECK(found);

    CHECK(heuchenne_check(swapped).has_value());
}

TEST_CASE("heuchenne corner cases") {
    // complete bipartite out-pattern: closure holds by construction
    Graph bipartite = make_graph({{"a", 1}, {"b", 1}, {"x", 1}, {"y", 1}},
                                 {{"e1", {"a", "x"}},
                                  {"e2", {"a", "y"}},
                                  {"e3", {"b", "x"}},
                                  {"e4", {"b", "y"}}});
    CHECK(!heuchenne_check(bipartite));

    Graph parallel = make_graph({{"u", 1}, {"v", 1}}, {{"a", {"u", "v"}}, {"b", {"u", "v"}}});
    CHECK_THROWS_AS(heuchenne_check(parallel), GraphError);
}
