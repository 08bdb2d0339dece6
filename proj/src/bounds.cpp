#include "pst/bounds.hpp"

#include <limits>
#include <stdexcept>

#include "pst/connectivity.hpp"

namespace pst {

int degree_upper_bound(const Graph& g, int k) {
    return std::max(0, g.min_degree() - k + 1);
}

int connectivity_upper_bound(const Graph& g, int k) {
    return std::max(0, vertex_connectivity(g) - k + 2);
}

int spacapan_connectivity(const Graph& g, const Graph& h) {
    if (g.order() < 2 || h.order() < 2)
        throw std::invalid_argument("spacapan_connectivity needs nontrivial factors");
    int a = vertex_connectivity(g) * h.order();
    int b = vertex_connectivity(h) * g.order();
    int c = g.min_degree() + h.min_degree();
    return std::min({a, b, c});
}

std::optional<int> adjacent_min_degree_bound(const Graph& g) {
    int delta = g.min_degree();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != delta) continue;
        for (Vertex w : g.neighbors(v))
            if (g.degree(w) == delta) return delta - 1;
    }
    return std::nullopt;
}

std::vector<ChainEntry> monotonicity_chain(const Graph& g, int k_max,
                                           const SearchLimits& limits) {
    if (k_max < 2) throw std::invalid_argument("monotonicity_chain needs k_max >= 2");
    std::vector<ChainEntry> chain;
    for (int k = 2; k <= k_max; ++k) {
        GlobalResult r = pendant_tree_connectivity(g, k, limits);
        chain.push_back({k, r.value, r.exact});
    }
    for (size_t i = 1; i < chain.size(); ++i)
        if (chain[i - 1].exact && chain[i].exact && chain[i - 1].value < chain[i].value)
            throw std::logic_error("monotonicity violated: tau_" + std::to_string(chain[i - 1].k) +
                                   " < tau_" + std::to_string(chain[i].k));
    return chain;
}

bool BoundLedger::consistent() const { return best_lower() <= best_upper(); }

int BoundLedger::best_upper() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& e : entries)
        if (e.kind == BoundEntry::Kind::Upper) best = std::min(best, e.value);
    return best;
}

int BoundLedger::best_lower() const {
    int best = 0;
    for (const auto& e : entries)
        if (e.kind == BoundEntry::Kind::Lower) best = std::max(best, e.value);
    return best;
}

BoundLedger make_bound_ledger(const Graph& g, int k) {
    BoundLedger ledger;
    ledger.graph_name = g.name();
    ledger.k = k;
    ledger.entries.push_back({"trivial", BoundEntry::Kind::Lower, 0, "tau_k >= 0"});
    ledger.entries.push_back({"degree", BoundEntry::Kind::Upper, degree_upper_bound(g, k),
                              "delta(G) >= k + tau_k - 1"});
    ledger.entries.push_back({"connectivity", BoundEntry::Kind::Upper,
                              connectivity_upper_bound(g, k), "kappa(G) >= k + tau_k - 2"});
    if (auto b = adjacent_min_degree_bound(g))
        ledger.entries.push_back({"adjacent-min-degree", BoundEntry::Kind::Note, *b,
                                  "kappa note for adjacent minimum-degree vertices; "
                                  "informational only"});
    if (!ledger.consistent())
        throw std::logic_error("bound ledger inconsistent for " + g.name());
    return ledger;
}

} // namespace pst
