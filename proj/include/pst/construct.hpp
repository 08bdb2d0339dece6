#pragma once

#include <array>
#include <string>
#include <vector>

#include "pst/graph.hpp"
#include "pst/solver.hpp"
#include "pst/steiner.hpp"

namespace pst {

// Projection of a 3-terminal product set onto its factors, plus the
// corresponded vertices inside the copy holding the first terminal.
struct FactorDecomposition {
    std::array<Vertex, 3> terminals{};  // x, y, z (ascending product ids)
    std::array<Vertex, 3> g_parts{};
    std::array<Vertex, 3> h_parts{};
    Vertex anchor_g = -1;               // copy H(anchor_g) holds x
    std::array<Vertex, 3> in_anchor{};  // x, y', z' inside the anchor copy
};

FactorDecomposition decompose(const Graph& product, const TerminalSet& s);

struct PathProductResult {
    Graph product; // P_n [] h
    Packing packing;
};

// Packing in P_n [] h witnessing tau_3(P_n [] H) >= |h_packing|, assembled by
// the same-copy / two-in-one-copy / three-copies case split. Same-copy and
// coincident-projection cases yield one extra tree. h_packing may be empty,
// in which case a maximum packing on the corresponded coordinates is solved
// for internally.
PathProductResult construct_path_product(int path_len, const Graph& h, const TerminalSet& s,
                                         const Packing& h_packing,
                                         const SearchLimits& limits = {});

// Internal engine shared with the theorem assembly: builds the path-case
// packing inside `ambient` along an explicit G-path (vertex sequence).
Packing path_case_packing(const Graph& ambient, const std::vector<Vertex>& g_path,
                          const TerminalSet& s, const Packing& h_packing,
                          const SearchLimits& limits);

// Exactly three internally disjoint pendant S-Steiner trees inside
// (T1 u T2) [] (T1' u T2'). The G-side trees must be rooted subdivisions of
// K_{1,3} on the three distinct projections; the H-side material depends on
// how many of x, y', z' coincide: three rooted trees (none), two disjoint
// paths (two), or trees pinning a neighbor of the common vertex (all).
Packing construct_pair_product(const Graph& product, const PendantTree& g_tree1,
                               const PendantTree& g_tree2, const PendantTree& h_tree1,
                               const PendantTree& h_tree2, const FactorDecomposition& dec);

struct TheoremConstruction {
    Graph product;   // g [] h in the caller's orientation
    Packing packing; // verified; lives in `product`
    int case_id = 0; // 1: same copy, 2: two in one copy, 3: distinct copies
    int k = 0;       // min(tau_3(g), tau_3(h))
    int l = 0;       // max(tau_3(g), tau_3(h))
    bool swapped = false;
    bool exact_factors = true;
    int bound = 0;   // min{3 floor(tau3(g)/2), 3 floor(tau3(h)/2)}
    std::string notes;
};

// Constructive witness for the product lower bound: dispatches on how the
// three terminals fall into copies and emits a verified packing of size
// k+l+2 (case 1), k+l (case 2) or 3*floor(k/2) (case 3).
TheoremConstruction construct_theorem_packing(const Graph& g, const Graph& h,
                                              const TerminalSet& s,
                                              const SearchLimits& limits = {});

struct ProbeReport {
    int tau_g = 0;
    int tau_h = 0;
    bool factors_exact = true;
    int bound = 0;
    int tau_product = -1; // -1: not computed
    bool product_exact = false;
    bool bound_holds = false;
    bool tight = false;
};

// Compares the theorem bound with the exact product value (products up to
// 60 vertices; larger ones are flagged inexact and skipped).
ProbeReport sharpness_probe(const Graph& g, const Graph& h, const SearchLimits& limits = {});

} // namespace pst
