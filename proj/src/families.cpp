#include "pst/families.hpp"

#include <sstream>
#include <stdexcept>

namespace pst {

namespace {

Graph fold_product(std::vector<Graph> factors) {
    Graph acc = std::move(factors.front());
    for (size_t i = 1; i < factors.size(); ++i) acc = cartesian_product(acc, factors[i]);
    return acc;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty family parameter");
        out.push_back(std::stoi(item));
    }
    return out;
}

} // namespace

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path(n) requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_indexed("P" + std::to_string(n), n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_indexed("C" + std::to_string(n), n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_indexed("K" + std::to_string(n), n, edges);
}

Graph wheel_graph(int n) {
    if (n < 3) throw std::invalid_argument("wheel(n) requires n >= 3");
    // Vertex 0 is the hub, 1..n the rim cycle.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i == n ? 1 : i + 1);
    }
    return Graph::from_indexed("W" + std::to_string(n), n + 1, edges);
}

Graph petersen_graph() {
    // Outer cycle 0..4, spokes i -- i+5, inner pentagram step 2.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_indexed("Petersen", 10, edges);
}

Graph hypercube_graph(int n) {
    if (n < 1) throw std::invalid_argument("hypercube(n) requires n >= 1");
    std::vector<Graph> factors(n, path_graph(2));
    return fold_product(std::move(factors));
}

Graph grid_graph(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("grid(n,m) requires n,m >= 1");
    return cartesian_product(path_graph(n), path_graph(m));
}

Graph mesh_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("mesh requires at least one factor");
    std::vector<Graph> factors;
    for (int s : sizes) factors.push_back(path_graph(s));
    return fold_product(std::move(factors));
}

Graph torus_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("torus requires at least one factor");
    std::vector<Graph> factors;
    for (int s : sizes) factors.push_back(cycle_graph(s));
    return fold_product(std::move(factors));
}

Graph generalized_hypercube_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("generalized_hypercube requires factors");
    std::vector<Graph> factors;
    for (int s : sizes) {
        if (s < 2) throw std::invalid_argument("generalized_hypercube factors must be >= 2");
        factors.push_back(complete_graph(s));
    }
    return fold_product(std::move(factors));
}

Graph hyper_petersen_graph(int n) {
    if (n < 3) throw std::invalid_argument("hyper_petersen(n) requires n >= 3");
    if (n == 3) return petersen_graph(); // HP3 is exactly the Petersen graph
    return cartesian_product(petersen_graph(), hypercube_graph(n - 3));
}

Graph family(const std::string& spec) {
    std::string kind = spec;
    std::string args;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        kind = spec.substr(0, pos);
        args = spec.substr(pos + 1);
    }
    auto ints = [&]() { return parse_int_list(args); };
    auto one_int = [&]() {
        auto v = parse_int_list(args);
        if (v.size() != 1) throw std::invalid_argument(kind + " takes one parameter");
        return v[0];
    };
    if (kind == "path") return path_graph(one_int());
    if (kind == "cycle") return cycle_graph(one_int());
    if (kind == "complete") return complete_graph(one_int());
    if (kind == "wheel") return wheel_graph(one_int());
    if (kind == "petersen") return petersen_graph();
    if (kind == "hypercube") return hypercube_graph(one_int());
    if (kind == "grid") {
        auto v = ints();
        if (v.size() != 2) throw std::invalid_argument("grid takes two parameters");
        return grid_graph(v[0], v[1]);
    }
    if (kind == "mesh") return mesh_graph(ints());
    if (kind == "torus") return torus_graph(ints());
    if (kind == "generalized_hypercube") return generalized_hypercube_graph(ints());
    if (kind == "hyper_petersen") return hyper_petersen_graph(one_int());
    throw std::invalid_argument("unknown family '" + kind + "'");
}

} // namespace pst
