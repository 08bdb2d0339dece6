#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/graph.hpp"

namespace pst {

// Ordered set of k >= 2 distinct terminals.
struct TerminalSet {
    std::vector<Vertex> vertices; // sorted, unique

    TerminalSet() = default;
    explicit TerminalSet(std::vector<Vertex> vs);
    int k() const { return static_cast<int>(vertices.size()); }
    bool contains(Vertex v) const;
    friend bool operator==(const TerminalSet&, const TerminalSet&) = default;
};

// A tree subgraph whose terminals all have degree exactly 1. When `root` is
// set the tree claims to be a subdivision of K_{1,3}: root of degree 3,
// interior vertices of degree 2, leaves exactly the terminals.
struct PendantTree {
    std::vector<VertexPair> edges; // sorted
    TerminalSet terminals;
    std::optional<Vertex> root;

    std::vector<Vertex> vertex_set() const; // sorted endpoints of edges
    void normalize();                       // sort edges
};

// Pairwise internally disjoint pendant trees on one terminal set.
struct Packing {
    std::vector<PendantTree> trees;
    bool verified = false;

    int size() const { return static_cast<int>(trees.size()); }
};

struct Verdict {
    bool ok = false;
    std::string violation; // empty when ok

    static Verdict pass() { return {true, ""}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// Accepts iff t is a tree inside g whose terminals all have degree one (and,
// when a root is claimed, iff the subdivision-of-K_{1,3} shape holds). Edges
// outside the host graph are reported distinctly from invariant failures.
Verdict verify_pendant_tree(const Graph& g, const PendantTree& t);

// Accepts iff all trees share one terminal set, each passes
// verify_pendant_tree, and every pair meets only in the terminals.
Verdict verify_packing(const Graph& g, const Packing& p);

// Minimal subtree spanning a 3-terminal set: drops dangling branches and
// identifies the degree-3 root. Only |S| = 3 is supported.
PendantTree prune_to_core(const PendantTree& t);

// Removes non-terminal leaves until every leaf is a terminal. Works for any k.
PendantTree prune_dangling(const PendantTree& t);

// Pendant tree from an (x,S)-fan: picks the smallest x outside S admitting
// three paths that share only x. Requires |S| = 3 and kappa(g) >= 3.
PendantTree fan_tree(const Graph& g, const TerminalSet& s);

} // namespace pst
