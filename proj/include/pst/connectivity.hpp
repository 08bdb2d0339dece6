#pragma once

#include <vector>

#include "pst/graph.hpp"

namespace pst {

// kappa(G) via vertex-capacity max-flow over non-adjacent vertex pairs
// (Menger). Complete graphs return n-1; disconnected or single-vertex
// graphs return 0.
int vertex_connectivity(const Graph& g);

// Maximum number of internally disjoint x-y paths (x != y).
int local_connectivity(const Graph& g, Vertex x, Vertex y);

// Up to `want` internally disjoint x-y paths (each as a vertex sequence
// x..y), extracted from a flow decomposition. Deterministic.
std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex x, Vertex y, int want);

// An (x,U)-fan: one path from x to each target, pairwise sharing only x and
// with no target appearing in the interior of another path. Empty result if
// no full fan exists.
std::vector<std::vector<Vertex>> vertex_fan(const Graph& g, Vertex x,
                                            const std::vector<Vertex>& targets);

} // namespace pst
