#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pst/construct.hpp"
#include "pst/families.hpp"
#include "pst/solver.hpp"

using namespace pst;

namespace {

Packing solved_packing(const Graph& h, const TerminalSet& s) {
    return local_pendant_connectivity(h, s).packing;
}

} // namespace

TEST_CASE("path product, all terminals in one copy") {
    // P3 [] W5 with x,y,z in H(u1): tau_3(W5) = 1 gives 1+1 trees
    Graph w5 = wheel_graph(5);
    Packing hp = solved_packing(w5, TerminalSet({1, 3, 5}));
    REQUIRE(hp.size() >= 1);
    hp.trees.resize(1);
    Graph probe = cartesian_product(path_graph(3), w5);
    TerminalSet s({probe.product_vertex(0, 1), probe.product_vertex(0, 3),
                   probe.product_vertex(0, 5)});
    PathProductResult r = construct_path_product(3, w5, s, hp);
    CHECK(r.packing.size() == 2);
    CHECK(r.packing.verified);
    CHECK(verify_packing(r.product, r.packing).ok);

    // n = 1 falls back to the in-copy packing
    PathProductResult flat = construct_path_product(
        1, w5, TerminalSet({1, 3, 5}), hp);
    CHECK(flat.packing.size() == 1);
}

TEST_CASE("path product, two terminals in one copy") {
    Graph w5 = wheel_graph(5);
    Graph probe = cartesian_product(path_graph(3), w5);

    // z' outside {x,y}
    TerminalSet s({probe.product_vertex(0, 1), probe.product_vertex(0, 3),
                   probe.product_vertex(2, 5)});
    Packing hp = solved_packing(w5, TerminalSet({1, 3, 5}));
    PathProductResult r = construct_path_product(3, w5, s, hp);
    CHECK(r.packing.size() == 1);
    CHECK(verify_packing(r.product, r.packing).ok);

    // z' coincides with x (same H-coordinate)
    TerminalSet s2({probe.product_vertex(0, 1), probe.product_vertex(0, 3),
                    probe.product_vertex(2, 1)});
    PathProductResult r2 = construct_path_product(3, w5, s2, Packing{});
    CHECK(r2.packing.size() >= 1);
    CHECK(verify_packing(r2.product, r2.packing).ok);
}

TEST_CASE("path product, three distinct copies") {
    Graph w5 = wheel_graph(5);
    Graph probe = cartesian_product(path_graph(3), w5);

    // distinct corresponded vertices
    TerminalSet s({probe.product_vertex(0, 1), probe.product_vertex(1, 3),
                   probe.product_vertex(2, 5)});
    PathProductResult r = construct_path_product(3, w5, s,
                                                 solved_packing(w5, TerminalSet({1, 3, 5})));
    CHECK(r.packing.size() == 1);
    CHECK(verify_packing(r.product, r.packing).ok);

    // all three project to one H-vertex: delta(H)-neighbor fan gives ell+1
    TerminalSet same({probe.product_vertex(0, 2), probe.product_vertex(1, 2),
                      probe.product_vertex(2, 2)});
    Packing one = solved_packing(w5, TerminalSet({1, 3, 5}));
    one.trees.resize(1);
    PathProductResult r2 = construct_path_product(3, w5, same, one);
    CHECK(r2.packing.size() == 2);
    CHECK(verify_packing(r2.product, r2.packing).ok);

    // two coincide
    TerminalSet twosame({probe.product_vertex(0, 2), probe.product_vertex(1, 2),
                         probe.product_vertex(2, 4)});
    PathProductResult r3 = construct_path_product(3, w5, twosame, one);
    CHECK(r3.packing.size() >= 1);
    CHECK(verify_packing(r3.product, r3.packing).ok);
}

TEST_CASE("pair product emits exactly three verified trees") {
    // K8-style projections with K5 copies: case 1 (distinct correspondents)
    Graph g = complete_graph(8);
    Graph h = complete_graph(5);
    Graph product = cartesian_product(g, h);
    TerminalSet s({product.product_vertex(0, 0), product.product_vertex(1, 1),
                   product.product_vertex(2, 2)});
    FactorDecomposition dec = decompose(product, s);

    Packing gp = solved_packing(g, TerminalSet({0, 1, 2}));
    REQUIRE(gp.size() >= 2);
    Packing hp = solved_packing(h, TerminalSet({0, 1, 2}));
    REQUIRE(hp.size() >= 2);

    Packing triple = construct_pair_product(product, gp.trees[0], gp.trees[1], hp.trees[0],
                                            hp.trees[1], dec);
    CHECK(triple.size() == 3);
    CHECK(triple.verified);
    CHECK(verify_packing(product, triple).ok);

    // containment in (T1 u T2) [] (T1' u T2')
    std::set<Vertex> gv, hv;
    std::set<VertexPair> ge, he;
    for (const PendantTree* t : {&gp.trees[0], &gp.trees[1]}) {
        for (const VertexPair& e : t->edges) ge.insert(e);
        for (Vertex v : t->vertex_set()) gv.insert(v);
    }
    for (const PendantTree* t : {&hp.trees[0], &hp.trees[1]}) {
        for (const VertexPair& e : t->edges) he.insert(e);
        for (Vertex v : t->vertex_set()) hv.insert(v);
    }
    for (const PendantTree& t : triple.trees)
        for (const VertexPair& e : t.edges) {
            Vertex ga = product.g_part(e.a), gb = product.g_part(e.b);
            Vertex ha = product.h_part(e.a), hb = product.h_part(e.b);
            if (ga == gb) { // H-edge inside a copy
                CHECK(gv.count(ga));
                CHECK(he.count(VertexPair(ha, hb)));
            } else { // G-edge along a rung
                CHECK(hv.count(ha));
                CHECK(ge.count(VertexPair(ga, gb)));
            }
        }
}

TEST_CASE("pair product input validation") {
    Graph g = complete_graph(6);
    Graph h = complete_graph(5);
    Graph product = cartesian_product(g, h);
    TerminalSet s({product.product_vertex(0, 0), product.product_vertex(1, 1),
                   product.product_vertex(2, 2)});
    FactorDecomposition dec = decompose(product, s);
    Packing gp = solved_packing(g, TerminalSet({0, 1, 2}));
    Packing hp = solved_packing(h, TerminalSet({0, 1, 2}));

    // trees that are not internally disjoint are rejected
    CHECK_THROWS_AS(construct_pair_product(product, gp.trees[0], gp.trees[0], hp.trees[0],
                                           hp.trees[1], dec),
                    std::invalid_argument);

    // unrooted G-side trees are rejected
    PendantTree unrooted = gp.trees[0];
    unrooted.root.reset();
    CHECK_THROWS_AS(construct_pair_product(product, unrooted, gp.trees[1], hp.trees[0],
                                           hp.trees[1], dec),
                    std::invalid_argument);

    // coincident projections are delegated to the theorem dispatcher
    TerminalSet degenerate({product.product_vertex(0, 0), product.product_vertex(0, 1),
                            product.product_vertex(2, 2)});
    FactorDecomposition bad = decompose(product, degenerate);
    CHECK_THROWS_AS(construct_pair_product(product, gp.trees[0], gp.trees[1], hp.trees[0],
                                           hp.trees[1], bad),
                    std::invalid_argument);
}

TEST_CASE("pair product coincident-correspondent cases") {
    Graph g = complete_graph(6);
    Graph h = complete_graph(5);
    Graph product = cartesian_product(g, h);
    Packing gp = solved_packing(g, TerminalSet({0, 1, 2}));

    // case 2: x and z' share an H-coordinate
    TerminalSet s2({product.product_vertex(0, 0), product.product_vertex(1, 1),
                    product.product_vertex(2, 0)});
    FactorDecomposition dec2 = decompose(product, s2);
    Packing paths = local_pendant_connectivity(h, TerminalSet({0, 1})).packing;
    REQUIRE(paths.size() >= 2);
    // first path with an interior vertex, then any other
    std::sort(paths.trees.begin(), paths.trees.end(),
              [](const PendantTree& a, const PendantTree& b) {
                  return a.edges.size() > b.edges.size();
              });
    PendantTree longer = paths.trees[0];
    PendantTree shorter = paths.trees[1];
    REQUIRE(longer.edges.size() >= 2);
    Packing triple2 = construct_pair_product(product, gp.trees[0], gp.trees[1], longer,
                                             shorter, dec2);
    CHECK(triple2.size() == 3);
    CHECK(verify_packing(product, triple2).ok);

    // case 3: all three correspondents coincide
    TerminalSet s3({product.product_vertex(0, 0), product.product_vertex(1, 0),
                    product.product_vertex(2, 0)});
    FactorDecomposition dec3 = decompose(product, s3);
    PendantTree e1, e2;
    e1.edges.emplace_back(0, 1);
    e2.edges.emplace_back(0, 2);
    Packing triple3 = construct_pair_product(product, gp.trees[0], gp.trees[1], e1, e2, dec3);
    CHECK(triple3.size() == 3);
    CHECK(verify_packing(product, triple3).ok);
}

TEST_CASE("pair product contract on generated instances") {
    // 50 generated rooted disjoint tree pairs across factor and case choices
    std::mt19937 rng(20240817);
    std::vector<std::pair<Graph, Graph>> hosts;
    hosts.emplace_back(complete_graph(6), complete_graph(5));
    hosts.emplace_back(complete_graph(7), complete_graph(6));
    hosts.emplace_back(complete_graph(8), wheel_graph(5));
    int built = 0;
    for (int trial = 0; built < 50 && trial < 600; ++trial) {
        auto& [g, h] = hosts[trial % hosts.size()];
        Graph product = cartesian_product(g, h);
        std::uniform_int_distribution<int> gpick(0, g.order() - 1);
        std::uniform_int_distribution<int> hpick(0, h.order() - 1);
        std::set<Vertex> gs;
        while (gs.size() < 3) gs.insert(gpick(rng));
        std::vector<Vertex> gv(gs.begin(), gs.end());
        std::vector<Vertex> hv{hpick(rng), hpick(rng), hpick(rng)};
        TerminalSet s({product.product_vertex(gv[0], hv[0]),
                       product.product_vertex(gv[1], hv[1]),
                       product.product_vertex(gv[2], hv[2])});
        if (s.k() != 3) continue;
        FactorDecomposition dec = decompose(product, s);

        Packing gp = solved_packing(g, TerminalSet(gv));
        if (gp.size() < 2) continue;
        PendantTree h1, h2;
        std::set<Vertex> coords(hv.begin(), hv.end());
        if (coords.size() == 3) {
            Packing hp = solved_packing(h, TerminalSet(hv));
            if (hp.size() < 2) continue;
            h1 = hp.trees[0];
            h2 = hp.trees[1];
        } else if (coords.size() == 2) {
            Vertex a = -1, o = -1;
            for (Vertex c : coords) {
                int count = 0;
                for (Vertex x : hv)
                    if (x == c) ++count;
                (count == 2 ? a : o) = c;
            }
            Packing hp = local_pendant_connectivity(h, TerminalSet({a, o})).packing;
            if (hp.size() < 2) continue;
            // keep one path with an interior if available
            std::sort(hp.trees.begin(), hp.trees.end(),
                      [](const PendantTree& x, const PendantTree& y) {
                          return x.edges.size() > y.edges.size();
                      });
            h1 = hp.trees[0];
            h2 = hp.trees[1];
            if (h1.edges.size() < 2) continue;
        } else {
            Vertex star = hv[0];
            const auto& nbrs = h.neighbors(star);
            if (nbrs.size() < 2) continue;
            h1.edges.emplace_back(star, nbrs[0]);
            h2.edges.emplace_back(star, nbrs[1]);
        }
        Packing triple =
            construct_pair_product(product, gp.trees[0], gp.trees[1], h1, h2, dec);
        CHECK(triple.size() == 3);
        CHECK(verify_packing(product, triple).ok);
        ++built;
    }
    CHECK(built == 50);
}

TEST_CASE("theorem packing covers all three cases") {
    Graph k5 = complete_graph(5);

    // case 3: distinct copies; tau_3(K5) = 2 so the bound is 3
    Graph p = cartesian_product(k5, k5);
    TerminalSet diag({p.product_vertex(0, 0), p.product_vertex(1, 1), p.product_vertex(2, 2)});
    TheoremConstruction c3 = construct_theorem_packing(k5, k5, diag);
    CHECK(c3.case_id == 3);
    CHECK(c3.bound == 3);
    CHECK(c3.packing.size() == 3);
    CHECK(c3.packing.verified);

    // case 1: same copy gives k + l + 2
    TerminalSet same({p.product_vertex(0, 0), p.product_vertex(0, 1), p.product_vertex(0, 2)});
    TheoremConstruction c1 = construct_theorem_packing(k5, k5, same);
    CHECK(c1.case_id == 1);
    CHECK(c1.packing.size() == c1.k + c1.l + 2);

    // case 2: two in one copy gives k + l
    TerminalSet two({p.product_vertex(0, 0), p.product_vertex(0, 1), p.product_vertex(2, 2)});
    TheoremConstruction c2 = construct_theorem_packing(k5, k5, two);
    CHECK(c2.case_id == 2);
    CHECK(c2.packing.size() == c2.k + c2.l);

    // degenerate factors: empty packing is acceptable when the bound is 0
    Graph c4 = cycle_graph(4);
    Graph pc = cartesian_product(c4, c4);
    TheoremConstruction empty = construct_theorem_packing(
        c4, c4,
        TerminalSet({pc.product_vertex(0, 0), pc.product_vertex(1, 1), pc.product_vertex(2, 2)}));
    CHECK(empty.bound == 0);
    CHECK(empty.packing.size() >= 0);
}

TEST_CASE("theorem packing with two pair blocks stays disjoint") {
    // tau_3(K7) = 4: floor(4/2) = 2 pair constructions, 6 trees
    Graph k7 = complete_graph(7);
    Graph p = cartesian_product(k7, k7);
    TerminalSet s({p.product_vertex(0, 0), p.product_vertex(1, 1), p.product_vertex(2, 2)});
    TheoremConstruction c = construct_theorem_packing(k7, k7, s);
    CHECK(c.case_id == 3);
    CHECK(c.k == 4);
    CHECK(c.bound == 6);
    CHECK(c.packing.size() == 6);
    CHECK(verify_packing(c.product, c.packing).ok);
}

TEST_CASE("theorem packing respects factor swap") {
    // tau_3(W5) = 1 < tau_3(K8) = 5: primary role goes to the wheel
    Graph w5 = wheel_graph(5);
    Graph k8 = complete_graph(8);
    Graph p = cartesian_product(k8, w5);
    TerminalSet s({p.product_vertex(0, 1), p.product_vertex(1, 2), p.product_vertex(2, 4)});
    TheoremConstruction c = construct_theorem_packing(k8, w5, s);
    CHECK(c.swapped);
    CHECK(c.k == 1);
    CHECK(c.l == 5);
    CHECK(verify_packing(c.product, c.packing).ok);
    // trees live in the original (k8 [] w5) orientation
    for (const PendantTree& t : c.packing.trees)
        for (Vertex v : t.vertex_set()) CHECK(v < p.order());
}

TEST_CASE("random terminal triples always verify") {
    std::mt19937 rng(987654);
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(complete_graph(5), complete_graph(5));
    pairs.emplace_back(complete_graph(4), wheel_graph(5));
    pairs.emplace_back(path_graph(4), wheel_graph(5));
    pairs.emplace_back(cycle_graph(5), complete_graph(4));
    for (auto& [g, h] : pairs) {
        Graph p = cartesian_product(g, h);
        std::uniform_int_distribution<int> pick(0, p.order() - 1);
        for (int i = 0; i < 8; ++i) {
            std::set<Vertex> ss;
            while (ss.size() < 3) ss.insert(pick(rng));
            TerminalSet s(std::vector<Vertex>(ss.begin(), ss.end()));
            TheoremConstruction c = construct_theorem_packing(g, h, s);
            CHECK(c.packing.verified);
            CHECK(c.packing.size() >= c.bound);
        }
    }
}

TEST_CASE("construction never exceeds the local optimum") {
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(complete_graph(4), complete_graph(4));
    pairs.emplace_back(complete_graph(4), wheel_graph(5));
    pairs.emplace_back(cycle_graph(4), cycle_graph(4));
    std::mt19937 rng(555);
    for (auto& [g, h] : pairs) {
        Graph p = cartesian_product(g, h);
        std::uniform_int_distribution<int> pick(0, p.order() - 1);
        for (int i = 0; i < 4; ++i) {
            std::set<Vertex> ss;
            while (ss.size() < 3) ss.insert(pick(rng));
            TerminalSet s(std::vector<Vertex>(ss.begin(), ss.end()));
            TheoremConstruction c = construct_theorem_packing(g, h, s);
            LocalResult exact = local_pendant_connectivity(p, s);
            REQUIRE(exact.exact);
            CHECK(c.packing.size() <= exact.value);
        }
    }
}

TEST_CASE("sharpness probe") {
    ProbeReport flat = sharpness_probe(path_graph(3), path_graph(3));
    CHECK(flat.bound == 0);
    CHECK(flat.tau_product == 0);
    CHECK(flat.bound_holds);
    CHECK(flat.tight);

    ProbeReport tori = sharpness_probe(cycle_graph(4), cycle_graph(5));
    CHECK(tori.bound == 0);
    CHECK(tori.bound_holds);
    CHECK(tori.tau_product >= 1);

    ProbeReport k4 = sharpness_probe(complete_graph(4), complete_graph(4));
    CHECK(k4.bound == 0);
    CHECK(k4.bound_holds);
}
