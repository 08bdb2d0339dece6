#pragma once

#include <string>
#include <vector>

#include "pst/graph.hpp"

namespace pst {

// Named network families. Multi-factor families (mesh, torus, generalized
// hypercube, hyper Petersen) are built by folding cartesian_product over
// their factor lists, so the results carry product metadata.
Graph path_graph(int n);
Graph cycle_graph(int n);            // n >= 3
Graph complete_graph(int n);
Graph wheel_graph(int n);            // hub joined to C_n, order n+1, n >= 3
Graph petersen_graph();
Graph hypercube_graph(int n);        // n >= 1
Graph grid_graph(int n, int m);
Graph mesh_graph(const std::vector<int>& sizes);
Graph torus_graph(const std::vector<int>& sizes);                // each >= 3
Graph generalized_hypercube_graph(const std::vector<int>& sizes); // each >= 2
Graph hyper_petersen_graph(int n);   // Petersen [] Q_{n-3}, n >= 3

// Parses CLI specs like "petersen", "torus:4,5", "complete:8".
Graph family(const std::string& spec);

} // namespace pst
