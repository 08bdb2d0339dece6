#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/graph.hpp"
#include "pst/solver.hpp"

namespace pst {

// Upper bound tau_k(G) <= delta(G) - k + 1, clamped at 0.
int degree_upper_bound(const Graph& g, int k);

// Upper bound tau_k(G) <= kappa(G) - k + 2, clamped at 0.
int connectivity_upper_bound(const Graph& g, int k);

// min{kappa(G)|V(H)|, kappa(H)|V(G)|, delta(G)+delta(H)}; factors must have
// at least two vertices each.
int spacapan_connectivity(const Graph& g, const Graph& h);

// delta(G)-1 when two adjacent minimum-degree vertices exist, else absent.
// Recorded as a note about kappa only; see the ledger caveat.
std::optional<int> adjacent_min_degree_bound(const Graph& g);

struct ChainEntry {
    int k = 0;
    int value = 0;
    bool exact = true;
};

// [tau_2 .. tau_k_max]; throws logic_error if exact entries ever increase.
std::vector<ChainEntry> monotonicity_chain(const Graph& g, int k_max,
                                           const SearchLimits& limits = {});

struct BoundEntry {
    enum class Kind { Lower, Upper, Note };
    std::string name;
    Kind kind = Kind::Note;
    int value = 0;
    std::string provenance;
};

struct BoundLedger {
    std::string graph_name;
    int k = 0;
    std::vector<BoundEntry> entries;

    // max lower <= min upper; notes are exempt.
    bool consistent() const;
    int best_upper() const;
    int best_lower() const;
};

// Assembles the standard entries for (g, k): the trivial lower bound, the
// degree and connectivity upper bounds, and the adjacent-min-degree note.
BoundLedger make_bound_ledger(const Graph& g, int k);

} // namespace pst
