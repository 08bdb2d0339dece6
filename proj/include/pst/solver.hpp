#pragma once

#include <vector>

#include "pst/graph.hpp"
#include "pst/steiner.hpp"

namespace pst {

struct SearchLimits {
    long long max_nodes = 10'000'000; // backtracking node budget
    int jobs = 1;                     // parallel evaluation of terminal sets
};

struct LocalResult {
    int value = 0;
    bool exact = true; // false: budget ran out, value is a certified lower bound
    Packing packing;   // certificate, size == value
    long long nodes = 0;
};

// Exact local pendant tree-connectivity tau_G(S) with a maximum packing as
// certificate. k = 2 reduces to internally disjoint paths via max-flow; for
// k >= 3 a tree packing corresponds one-to-one to disjoint connected subsets
// of V\S that each dominate every terminal, which is what the search branches
// over. Disconnected hosts yield 0.
LocalResult local_pendant_connectivity(const Graph& g, const TerminalSet& s,
                                       const SearchLimits& limits = {});

struct GlobalResult {
    int value = 0;
    bool exact = true;
    TerminalSet witness; // a minimizing S (empty only for convention cases)
    long long nodes = 0;
};

// tau_k(G) = min over all k-subsets. Prunes with the degree/connectivity cutoffs
// min{delta-k+1, kappa-k+2} and per-set terminal-degree caps; k = 2 equals
// the connectivity. k > |V| returns 1 on connected graphs by convention.
GlobalResult pendant_tree_connectivity(const Graph& g, int k, const SearchLimits& limits = {});

// Decision core, exposed for the construction engine: does g contain `count`
// internally disjoint pendant S-Steiner trees? On success returns the packing.
enum class DecideStatus { Yes, No, Budget };
struct DecideResult {
    DecideStatus status = DecideStatus::No;
    std::vector<std::vector<Vertex>> classes; // internal vertex sets on Yes
};
DecideResult decide_packing(const Graph& g, const TerminalSet& s, int count,
                            long long& node_budget);

// Deterministic certificate: one tree per class (spanning tree plus one
// attachment edge per terminal, pruned; rooted subdivisions when k = 3).
Packing packing_from_classes(const Graph& g, const TerminalSet& s,
                             const std::vector<std::vector<Vertex>>& classes);

} // namespace pst
