#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pst/bounds.hpp"
#include "pst/connectivity.hpp"
#include "pst/families.hpp"

using namespace pst;

TEST_CASE("degree upper bound") {
    CHECK(degree_upper_bound(wheel_graph(5), 3) == 1);
    CHECK(degree_upper_bound(petersen_graph(), 3) == 1);
    CHECK(degree_upper_bound(hyper_petersen_graph(4), 3) == 2);
    CHECK(degree_upper_bound(path_graph(4), 3) == 0); // clamps at zero
}

TEST_CASE("connectivity upper bound") {
    Graph t3 = torus_graph({4, 4, 4});
    CHECK(vertex_connectivity(t3) == 6);
    CHECK(connectivity_upper_bound(t3, 3) == 2 * 3 - 3 + 2);
    CHECK(connectivity_upper_bound(generalized_hypercube_graph({3, 3}), 3) == 3);
    CHECK(connectivity_upper_bound(complete_graph(5), 2) == 4);
}

TEST_CASE("spacapan formula matches flow-based connectivity") {
    // torus: kappa = 2n per factor count
    CHECK(spacapan_connectivity(cycle_graph(3), cycle_graph(5)) == 4);
    CHECK(spacapan_connectivity(complete_graph(3), complete_graph(4)) == 5);
    CHECK(spacapan_connectivity(path_graph(2), path_graph(2)) == 2);
    CHECK_THROWS_AS(spacapan_connectivity(path_graph(1), path_graph(3)),
                    std::invalid_argument);

    std::vector<Graph> factors;
    factors.push_back(cycle_graph(3));
    factors.push_back(cycle_graph(5));
    factors.push_back(complete_graph(3));
    factors.push_back(complete_graph(4));
    factors.push_back(path_graph(3));
    factors.push_back(wheel_graph(4));
    for (const Graph& a : factors)
        for (const Graph& b : factors) {
            if (a.order() * b.order() > 60) continue;
            CHECK(spacapan_connectivity(a, b) == vertex_connectivity(cartesian_product(a, b)));
        }
}

TEST_CASE("adjacent minimum-degree note") {
    CHECK(adjacent_min_degree_bound(wheel_graph(5)) == 2);
    Graph star("star", {"h", "a", "b", "c", "d"},
               {{"h", "a"}, {"h", "b"}, {"h", "c"}, {"h", "d"}});
    CHECK(!adjacent_min_degree_bound(star).has_value());
    CHECK(adjacent_min_degree_bound(path_graph(2)) == 0);
    // the statement read as a kappa bound fails on C4; we keep it as a note
    Graph c4 = cycle_graph(4);
    CHECK(adjacent_min_degree_bound(c4) == 1);
    CHECK(vertex_connectivity(c4) == 2);
}

TEST_CASE("monotonicity chains") {
    auto chain = monotonicity_chain(complete_graph(5), 5);
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].value == 4); // tau_2 = kappa
    CHECK(chain[1].value == 2);
    CHECK(chain[2].value == 1);
    CHECK(chain[3].value == 0);

    for (const Graph& g : {petersen_graph(), torus_graph({3, 3}), grid_graph(3, 3)}) {
        auto c = monotonicity_chain(g, 5);
        for (size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].value >= c[i].value);
        CHECK(c[0].value == vertex_connectivity(g));
    }
}

TEST_CASE("ledger stays consistent across the corpus") {
    for (int k = 2; k <= 4; ++k)
        for (const Graph& g : {petersen_graph(), wheel_graph(6), complete_graph(6),
                               torus_graph({3, 4}), grid_graph(3, 4), hypercube_graph(3)}) {
            BoundLedger ledger = make_bound_ledger(g, k);
            CHECK(ledger.consistent());
            CHECK(ledger.best_lower() == 0);
            CHECK(ledger.best_upper() >= 0);
        }
}
