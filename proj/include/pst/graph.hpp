#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pst {

using Vertex = int;

// Unordered edge, normalized so a <= b.
struct VertexPair {
    Vertex a = -1;
    Vertex b = -1;
    VertexPair() = default;
    VertexPair(Vertex x, Vertex y) : a(std::min(x, y)), b(std::max(x, y)) {}
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

class Graph;

// Factor metadata kept by cartesian_product so that copies and corresponded
// vertices can be recovered later. Vertex (gu,hv) has index gu*|V(h)|+hv.
struct ProductInfo {
    std::shared_ptr<const Graph> g;
    std::shared_ptr<const Graph> h;
};

// Simple undirected labeled graph. Immutable once constructed; no self-loops,
// no multi-edges, every edge endpoint must name a declared vertex.
class Graph {
  public:
    Graph() = default;
    Graph(std::string name, std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& edges);

    // Vertices labeled "0".."n-1".
    static Graph from_indexed(std::string name, int n,
                              const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }
    const std::string& name() const { return name_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;
    int degree(Vertex v) const;
    int min_degree() const;

    const std::string& label(Vertex v) const;
    std::optional<Vertex> find_label(const std::string& label) const;
    std::vector<VertexPair> edges() const; // sorted

    bool is_connected() const;
    // Component id per vertex, ids assigned in discovery order from vertex 0.
    std::vector<int> components() const;

    bool is_product() const { return product_ != nullptr; }
    const Graph& factor_g() const;
    const Graph& factor_h() const;
    Vertex g_part(Vertex pv) const;
    Vertex h_part(Vertex pv) const;
    Vertex product_vertex(Vertex gu, Vertex hv) const;

    friend Graph cartesian_product(const Graph& g, const Graph& h);

  private:
    void check_vertex(Vertex v) const;

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adj_; // sorted neighbor lists
    int edge_count_ = 0;
    std::shared_ptr<const ProductInfo> product_;
};

// G (square) H per the adjacency rule: (u,v)~(u',v') iff u=u' and vv' in E(H),
// or v=v' and uu' in E(G). Rejects empty factors.
Graph cartesian_product(const Graph& g, const Graph& h);

enum class FactorRole { FixG, FixH };

// One copy H(u) (role FixG, anchor u in V(G)) or G(v) inside a product,
// with the identity correspondence map from factor vertices to product ones.
struct CopySubgraph {
    FactorRole role = FactorRole::FixG;
    Vertex anchor = -1;
    std::vector<Vertex> vertex_map; // factor vertex -> product vertex
    std::vector<VertexPair> edges;  // induced edges, sorted
};

CopySubgraph copy_subgraph(const Graph& product, FactorRole role, Vertex anchor);

// Coordinate replacement: the vertex corresponding to v in the copy anchored
// at new_anchor (role names the factor that is replaced).
Vertex corresponded(const Graph& product, Vertex v, FactorRole role, Vertex new_anchor);

} // namespace pst
