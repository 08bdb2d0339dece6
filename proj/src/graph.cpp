#include "pst/graph.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pst {

Graph::Graph(std::string name, std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : name_(std::move(name)), labels_(std::move(labels)) {
    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < static_cast<int>(labels_.size()); ++v) {
        if (!index.emplace(labels_[v], v).second)
            throw std::invalid_argument("duplicate vertex label '" + labels_[v] + "'");
    }
    adj_.resize(labels_.size());
    std::set<VertexPair> seen;
    for (const auto& [la, lb] : edges) {
        auto ia = index.find(la);
        auto ib = index.find(lb);
        if (ia == index.end() || ib == index.end())
            throw std::invalid_argument("edge endpoint '" + (ia == index.end() ? la : lb) +
                                        "' is not a declared vertex");
        if (ia->second == ib->second)
            throw std::invalid_argument("self-loop at '" + la + "' is not allowed");
        VertexPair e(ia->second, ib->second);
        if (!seen.insert(e).second) continue; // collapse duplicates
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
        ++edge_count_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::from_indexed(std::string name, int n,
                          const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        named.emplace_back(labels[a], labels[b]);
    }
    return Graph(std::move(name), std::move(labels), named);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) throw std::out_of_range("vertex index out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v)
        d = (v == 0) ? degree(v) : std::min(d, degree(v));
    return order() == 0 ? 0 : d;
}

const std::string& Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<Vertex> Graph::find_label(const std::string& label) const {
    for (Vertex v = 0; v < order(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (Vertex v = 0; v < order(); ++v)
        for (Vertex w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::components() const {
    std::vector<int> comp(order(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < order(); ++start) {
        if (comp[start] != -1) continue;
        comp[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[v])
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool Graph::is_connected() const {
    if (order() == 0) return false;
    auto comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

const Graph& Graph::factor_g() const {
    if (!product_) throw std::logic_error("graph was not built by cartesian_product");
    return *product_->g;
}

const Graph& Graph::factor_h() const {
    if (!product_) throw std::logic_error("graph was not built by cartesian_product");
    return *product_->h;
}

Vertex Graph::g_part(Vertex pv) const {
    check_vertex(pv);
    return pv / factor_h().order();
}

Vertex Graph::h_part(Vertex pv) const {
    check_vertex(pv);
    return pv % factor_h().order();
}

Vertex Graph::product_vertex(Vertex gu, Vertex hv) const {
    const Graph& h = factor_h();
    if (gu < 0 || gu >= factor_g().order() || hv < 0 || hv >= h.order())
        throw std::out_of_range("factor coordinate out of range");
    return gu * h.order() + hv;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("cartesian_product: factors must be nonempty");
    const int n = g.order(), m = h.order();
    Graph p;
    p.name_ = g.name() + "[]" + h.name();
    p.labels_.resize(static_cast<size_t>(n) * m);
    p.adj_.resize(static_cast<size_t>(n) * m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < m; ++v)
            p.labels_[static_cast<size_t>(u) * m + v] = "(" + g.label(u) + "," + h.label(v) + ")";
    auto id = [m](Vertex u, Vertex v) { return u * m + v; };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < m; ++v) {
            for (Vertex w : h.neighbors(v))
                if (v < w) {
                    p.adj_[id(u, v)].push_back(id(u, w));
                    p.adj_[id(u, w)].push_back(id(u, v));
                    ++p.edge_count_;
                }
            for (Vertex w : g.neighbors(u))
                if (u < w) {
                    p.adj_[id(u, v)].push_back(id(w, v));
                    p.adj_[id(w, v)].push_back(id(u, v));
                    ++p.edge_count_;
                }
        }
    for (auto& list : p.adj_) std::sort(list.begin(), list.end());
    auto info = std::make_shared<ProductInfo>();
    info->g = std::make_shared<Graph>(g);
    info->h = std::make_shared<Graph>(h);
    p.product_ = std::move(info);
    return p;
}

CopySubgraph copy_subgraph(const Graph& product, FactorRole role, Vertex anchor) {
    const Graph& fixed = (role == FactorRole::FixG) ? product.factor_g() : product.factor_h();
    const Graph& moving = (role == FactorRole::FixG) ? product.factor_h() : product.factor_g();
    if (anchor < 0 || anchor >= fixed.order())
        throw std::invalid_argument("copy_subgraph: anchor is not a vertex of the fixed factor");
    CopySubgraph copy;
    copy.role = role;
    copy.anchor = anchor;
    copy.vertex_map.resize(moving.order());
    for (Vertex v = 0; v < moving.order(); ++v)
        copy.vertex_map[v] = (role == FactorRole::FixG) ? product.product_vertex(anchor, v)
                                                        : product.product_vertex(v, anchor);
    for (const VertexPair& e : moving.edges())
        copy.edges.emplace_back(copy.vertex_map[e.a], copy.vertex_map[e.b]);
    std::sort(copy.edges.begin(), copy.edges.end());
    return copy;
}

Vertex corresponded(const Graph& product, Vertex v, FactorRole role, Vertex new_anchor) {
    if (role == FactorRole::FixG) return product.product_vertex(new_anchor, product.h_part(v));
    return product.product_vertex(product.g_part(v), new_anchor);
}

} // namespace pst
