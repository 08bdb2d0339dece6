#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pst/families.hpp"
#include "pst/steiner.hpp"

using namespace pst;

namespace {

PendantTree tree_of(std::vector<VertexPair> edges, std::vector<Vertex> terminals,
                    std::optional<Vertex> root = std::nullopt) {
    PendantTree t;
    t.edges = std::move(edges);
    t.terminals = TerminalSet(std::move(terminals));
    t.root = root;
    t.normalize();
    return t;
}

} // namespace

TEST_CASE("verify_pendant_tree accepts stars and rejects bad shapes") {
    Graph k5 = complete_graph(5);

    // K_{1,3} with center 4, leaves 0,1,2
    PendantTree star = tree_of({{4, 0}, {4, 1}, {4, 2}}, {0, 1, 2}, 4);
    CHECK(verify_pendant_tree(k5, star).ok);

    // path 0-1-2 with S = {0,1,2}: middle terminal has degree 2
    PendantTree path = tree_of({{0, 1}, {1, 2}}, {0, 1, 2});
    Verdict v = verify_pendant_tree(k5, path);
    CHECK(!v.ok);
    CHECK(v.violation.find("degree 2") != std::string::npos);

    // cycle-closing edge: not a tree
    PendantTree cyc = tree_of({{4, 0}, {4, 1}, {4, 2}, {0, 1}}, {0, 1, 2});
    CHECK(!verify_pendant_tree(k5, cyc).ok);

    // edge outside the host graph is a distinct error
    Graph p4 = path_graph(4);
    PendantTree ghost = tree_of({{0, 2}}, {0, 2});
    Verdict gv = verify_pendant_tree(p4, ghost);
    CHECK(!gv.ok);
    CHECK(gv.violation.find("not an edge of the host graph") != std::string::npos);

    // wrong root claims are caught
    PendantTree misroot = tree_of({{4, 0}, {4, 1}, {4, 2}}, {0, 1, 2}, 0);
    CHECK(!verify_pendant_tree(k5, misroot).ok);
}

TEST_CASE("verify_packing checks pairwise internal disjointness") {
    Graph k5 = complete_graph(5);
    // two stars sharing only S = {0,1,2}
    Packing good;
    good.trees.push_back(tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}, 3));
    good.trees.push_back(tree_of({{4, 0}, {4, 1}, {4, 2}}, {0, 1, 2}, 4));
    CHECK(verify_packing(k5, good).ok);

    // sharing internal vertex 3 is rejected and names the vertex
    Graph k6 = complete_graph(6);
    Packing bad;
    bad.trees.push_back(tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}, 3));
    bad.trees.push_back(tree_of({{4, 0}, {4, 1}, {4, 3}, {4, 5}, {5, 2}}, {0, 1, 2}));
    Verdict v = verify_packing(k6, bad);
    CHECK(!v.ok);
    CHECK(v.violation.find("3") != std::string::npos);

    // shared edge is rejected
    Packing shared_edge;
    shared_edge.trees.push_back(tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}));
    shared_edge.trees.push_back(tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}));
    CHECK(!verify_packing(k5, shared_edge).ok);

    // single-tree packing is fine; mismatched terminal sets are not
    Packing single;
    single.trees.push_back(tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2}, 3));
    CHECK(verify_packing(k5, single).ok);
    Packing mismatch = good;
    mismatch.trees[1].terminals = TerminalSet({0, 1, 3});
    CHECK(!verify_packing(k5, mismatch).ok);
    CHECK(verify_packing(k5, Packing{}).ok); // empty packing is vacuously fine
}

TEST_CASE("prune_to_core extracts the rooted subdivision") {
    Graph k4 = complete_graph(4);
    // spanning tree of K4 with terminals 0,1,2 as leaves: star at 3
    PendantTree t = tree_of({{3, 0}, {3, 1}, {3, 2}}, {0, 1, 2});
    PendantTree core = prune_to_core(t);
    CHECK(core.root == 3);
    CHECK(core.edges == t.edges);

    // dangling non-terminal leaf gets pruned
    Graph k6 = complete_graph(6);
    PendantTree dangle = tree_of({{3, 0}, {3, 1}, {3, 4}, {4, 2}, {4, 5}}, {0, 1, 2});
    PendantTree pruned = prune_to_core(dangle);
    CHECK(pruned.edges.size() == 4);
    CHECK(pruned.root == 3);
    CHECK(verify_pendant_tree(k6, pruned).ok);

    PendantTree two = tree_of({{0, 1}}, {0, 1});
    CHECK_THROWS_AS(prune_to_core(two), std::invalid_argument);
}

TEST_CASE("fan_tree builds a valid pendant tree when kappa >= 3") {
    Graph pet = petersen_graph();
    TerminalSet s({1, 4, 6});
    PendantTree t = fan_tree(pet, s);
    CHECK(verify_pendant_tree(pet, t).ok);
    CHECK(t.root.has_value());

    Graph torus = torus_graph({3, 3});
    PendantTree t2 = fan_tree(torus, TerminalSet({0, 4, 8}));
    CHECK(verify_pendant_tree(torus, t2).ok);

    // K4: the fourth vertex is the only possible root
    Graph k4 = complete_graph(4);
    PendantTree t3 = fan_tree(k4, TerminalSet({0, 1, 2}));
    CHECK(t3.root == 3);
    CHECK(t3.edges.size() == 3);

    CHECK_THROWS_WITH_AS(fan_tree(path_graph(5), TerminalSet({0, 2, 4})),
                         "fan unavailable: kappa(g) < 3", std::invalid_argument);
}
