#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "pst/bounds.hpp"
#include "pst/connectivity.hpp"
#include "pst/families.hpp"
#include "pst/solver.hpp"

using namespace pst;

TEST_CASE("local values on the named examples") {
    // wheel: every 3-subset packs at least one tree, spread rim sets exactly one
    Graph w6 = wheel_graph(6);
    CHECK(local_pendant_connectivity(w6, TerminalSet({1, 3, 5})).value == 1);
    // hub sets leave two opposite rim arcs free: {2,3} and {5,6} both dominate
    CHECK(local_pendant_connectivity(w6, TerminalSet({0, 1, 4})).value == 2);

    // a path has no branch vertex to spare
    CHECK(local_pendant_connectivity(path_graph(5), TerminalSet({0, 2, 4})).value == 0);

    // K8 packs five trees through the five free vertices
    Graph k8 = complete_graph(8);
    LocalResult r = local_pendant_connectivity(k8, TerminalSet({0, 1, 2}));
    CHECK(r.value == 5);
    CHECK(r.exact);
    CHECK(r.packing.size() == 5);

    // disconnected host or split terminals give zero
    Graph split("split", {"a", "b", "c", "d", "e", "f"},
                {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}});
    CHECK(local_pendant_connectivity(split, TerminalSet({0, 1, 3})).value == 0);
}

TEST_CASE("certificates verify and match the reported size") {
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(6));
    corpus.push_back(wheel_graph(5));
    corpus.push_back(petersen_graph());
    corpus.push_back(torus_graph({3, 3}));
    corpus.push_back(hypercube_graph(3));
    for (const Graph& g : corpus) {
        TerminalSet s({0, g.order() / 2, g.order() - 1});
        LocalResult r = local_pendant_connectivity(g, s);
        CHECK(r.exact);
        CHECK(r.packing.size() == r.value);
        CHECK(r.packing.verified);
        CHECK(verify_packing(g, r.packing).ok);
        for (const PendantTree& t : r.packing.trees) CHECK(t.root.has_value());
    }
}

TEST_CASE("k = 2 agrees with connectivity") {
    std::vector<Graph> corpus;
    corpus.push_back(cycle_graph(6));
    corpus.push_back(complete_graph(5));
    corpus.push_back(petersen_graph());
    corpus.push_back(grid_graph(3, 3));
    corpus.push_back(wheel_graph(7));
    corpus.push_back(path_graph(6));
    for (const Graph& g : corpus) {
        GlobalResult r = pendant_tree_connectivity(g, 2);
        CHECK(r.value == vertex_connectivity(g));
        CHECK(r.witness.k() == 2);
    }
}

TEST_CASE("global values on known graphs") {
    CHECK(pendant_tree_connectivity(petersen_graph(), 3).value == 1);
    CHECK(pendant_tree_connectivity(hypercube_graph(3), 3).value == 1);
    CHECK(pendant_tree_connectivity(grid_graph(3, 3), 3).value == 0);
    CHECK(pendant_tree_connectivity(complete_graph(5), 3).value == 2);
    CHECK(pendant_tree_connectivity(complete_graph(5), 4).value == 1);
    CHECK(pendant_tree_connectivity(complete_graph(5), 5).value == 0);
    for (int n = 4; n <= 7; ++n) CHECK(pendant_tree_connectivity(wheel_graph(n), 3).value == 1);

    // conventions
    Graph split("split", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(pendant_tree_connectivity(split, 3).value == 0);
    CHECK(pendant_tree_connectivity(path_graph(2), 3).value == 1); // k > |V|

    // the witness attains the minimum
    GlobalResult r = pendant_tree_connectivity(wheel_graph(5), 3);
    CHECK(local_pendant_connectivity(wheel_graph(5), r.witness).value == r.value);
}

TEST_CASE("budget exhaustion is reported, never silently wrong") {
    SearchLimits tiny;
    tiny.max_nodes = 1;
    Graph hp4 = hyper_petersen_graph(4);
    LocalResult r = local_pendant_connectivity(hp4, TerminalSet({0, 7, 13}), tiny);
    CHECK(!r.exact);
    // still a sound lower bound with a verified certificate
    CHECK(r.packing.size() == r.value);
    CHECK(verify_packing(hp4, r.packing).ok);
}

TEST_CASE("solver equals the tripod-enumeration oracle on small graphs") {
    // fixed catalog plus seeded random connected graphs
    std::vector<Graph> corpus;
    corpus.push_back(complete_graph(5));
    corpus.push_back(cycle_graph(6));
    corpus.push_back(wheel_graph(5));
    corpus.push_back(path_graph(6));
    corpus.push_back(grid_graph(2, 3));
    for (int n = 4; n <= 7; ++n)
        for (int i = 0; i < 12; ++i)
            corpus.push_back(oracle::random_connected_graph(n, 1000ull * n + i));

    for (const Graph& g : corpus) {
        // every terminal set, not just the minimizing one
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b)
                for (Vertex c = b + 1; c < g.order(); ++c) {
                    TerminalSet s({a, b, c});
                    INFO("graph ", g.name(), " order ", g.order(), " S={", a, ",", b, ",", c, "}");
                    CHECK(local_pendant_connectivity(g, s).value == oracle::local_tau3(g, s));
                }
        CHECK(pendant_tree_connectivity(g, 3).value == oracle::tau3(g));
    }
}

TEST_CASE("parallel scan matches the serial result") {
    SearchLimits par;
    par.jobs = 4;
    std::vector<Graph> corpus;
    corpus.push_back(petersen_graph());
    corpus.push_back(torus_graph({3, 4}));
    corpus.push_back(complete_graph(6));
    for (const Graph& g : corpus) {
        GlobalResult serial = pendant_tree_connectivity(g, 3);
        GlobalResult threaded = pendant_tree_connectivity(g, 3, par);
        CHECK(serial.value == threaded.value);
        CHECK(serial.witness.vertices == threaded.witness.vertices);
    }
}
