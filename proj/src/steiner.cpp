#include "pst/steiner.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "pst/connectivity.hpp"

namespace pst {

TerminalSet::TerminalSet(std::vector<Vertex> vs) : vertices(std::move(vs)) {
    std::sort(vertices.begin(), vertices.end());
    auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end()) throw std::invalid_argument("terminal set has a repeated vertex");
    if (vertices.size() < 2) throw std::invalid_argument("terminal set needs at least 2 vertices");
}

bool TerminalSet::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<Vertex> PendantTree::vertex_set() const {
    std::set<Vertex> vs;
    for (const VertexPair& e : edges) {
        vs.insert(e.a);
        vs.insert(e.b);
    }
    return {vs.begin(), vs.end()};
}

void PendantTree::normalize() { std::sort(edges.begin(), edges.end()); }

namespace {

std::map<Vertex, int> degrees(const PendantTree& t) {
    std::map<Vertex, int> deg;
    for (const VertexPair& e : t.edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

bool tree_connected(const PendantTree& t) {
    auto vs = t.vertex_set();
    if (vs.empty()) return false;
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const VertexPair& e : t.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::set<Vertex> seen{vs.front()};
    std::vector<Vertex> stack{vs.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vs.size();
}

} // namespace

Verdict verify_pendant_tree(const Graph& g, const PendantTree& t) {
    for (const VertexPair& e : t.edges) {
        if (e.a < 0 || e.b >= g.order())
            return Verdict::fail("edge endpoint outside host graph");
        if (!g.has_edge(e.a, e.b))
            return Verdict::fail("edge {" + g.label(e.a) + "," + g.label(e.b) +
                                 "} is not an edge of the host graph");
    }
    std::set<VertexPair> unique(t.edges.begin(), t.edges.end());
    if (unique.size() != t.edges.size()) return Verdict::fail("repeated edge in tree");
    if (t.edges.empty()) return Verdict::fail("tree has no edges");
    auto vs = t.vertex_set();
    if (vs.size() != t.edges.size() + 1)
        return Verdict::fail("edge set is not a tree: |V| != |E|+1");
    if (!tree_connected(t)) return Verdict::fail("edge set is not connected");
    auto deg = degrees(t);
    for (Vertex s : t.terminals.vertices) {
        auto it = deg.find(s);
        if (it == deg.end())
            return Verdict::fail("terminal " + g.label(s) + " is not in the tree");
        if (it->second != 1)
            return Verdict::fail("terminal " + g.label(s) + " has degree " +
                                 std::to_string(it->second) + ", expected 1");
    }
    if (t.root) {
        Vertex r = *t.root;
        auto it = deg.find(r);
        if (it == deg.end()) return Verdict::fail("claimed root is not in the tree");
        if (t.terminals.contains(r)) return Verdict::fail("claimed root is a terminal");
        if (it->second != 3)
            return Verdict::fail("claimed root has degree " + std::to_string(it->second) +
                                 ", expected 3");
        for (const auto& [v, d] : deg) {
            if (v == r || t.terminals.contains(v)) continue;
            if (d != 2)
                return Verdict::fail("interior vertex " + g.label(v) + " has degree " +
                                     std::to_string(d) + " in a claimed K_{1,3} subdivision");
        }
        for (const auto& [v, d] : deg)
            if (d == 1 && !t.terminals.contains(v))
                return Verdict::fail("leaf " + g.label(v) + " is not a terminal");
    }
    return Verdict::pass();
}

Verdict verify_packing(const Graph& g, const Packing& p) {
    if (p.trees.empty()) return Verdict::pass();
    const TerminalSet& s = p.trees.front().terminals;
    for (size_t i = 1; i < p.trees.size(); ++i)
        if (!(p.trees[i].terminals == s))
            return Verdict::fail("tree " + std::to_string(i) + " has a different terminal set");
    for (size_t i = 0; i < p.trees.size(); ++i) {
        Verdict v = verify_pendant_tree(g, p.trees[i]);
        if (!v.ok) return Verdict::fail("tree " + std::to_string(i) + ": " + v.violation);
    }
    for (size_t i = 0; i < p.trees.size(); ++i) {
        auto vi = p.trees[i].vertex_set();
        std::set<VertexPair> ei(p.trees[i].edges.begin(), p.trees[i].edges.end());
        for (size_t j = i + 1; j < p.trees.size(); ++j) {
            for (const VertexPair& e : p.trees[j].edges)
                if (ei.count(e))
                    return Verdict::fail("trees " + std::to_string(i) + "," + std::to_string(j) +
                                         " share edge {" + g.label(e.a) + "," + g.label(e.b) + "}");
            for (Vertex v : p.trees[j].vertex_set())
                if (!s.contains(v) && std::binary_search(vi.begin(), vi.end(), v))
                    return Verdict::fail("trees " + std::to_string(i) + "," + std::to_string(j) +
                                         " share non-terminal vertex " + g.label(v));
        }
    }
    return Verdict::pass();
}

PendantTree prune_dangling(const PendantTree& t) {
    std::set<VertexPair> edges(t.edges.begin(), t.edges.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Vertex, int> deg;
        for (const VertexPair& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        for (const VertexPair& e : std::vector<VertexPair>(edges.begin(), edges.end())) {
            auto leaf = [&](Vertex v) { return deg[v] == 1 && !t.terminals.contains(v); };
            if (leaf(e.a) || leaf(e.b)) {
                edges.erase(e);
                changed = true;
                break;
            }
        }
    }
    PendantTree out;
    out.edges.assign(edges.begin(), edges.end());
    out.terminals = t.terminals;
    out.normalize();
    return out;
}

PendantTree prune_to_core(const PendantTree& t) {
    if (t.terminals.k() != 3)
        throw std::invalid_argument("prune_to_core supports exactly 3 terminals");
    PendantTree core = prune_dangling(t);
    auto deg = degrees(core);
    core.root.reset();
    for (const auto& [v, d] : deg)
        if (d == 3 && !core.terminals.contains(v)) {
            core.root = v;
            break;
        }
    if (!core.root)
        throw std::invalid_argument("prune_to_core: input does not span its terminals as a tree");
    return core;
}

PendantTree fan_tree(const Graph& g, const TerminalSet& s) {
    if (s.k() != 3) throw std::invalid_argument("fan_tree needs exactly 3 terminals");
    if (g.order() < 4) throw std::invalid_argument("fan_tree needs at least 4 vertices");
    if (vertex_connectivity(g) < 3) throw std::invalid_argument("fan unavailable: kappa(g) < 3");
    for (Vertex x = 0; x < g.order(); ++x) {
        if (s.contains(x)) continue;
        auto fan = vertex_fan(g, x, s.vertices);
        if (fan.empty()) continue;
        PendantTree t;
        t.terminals = s;
        t.root = x;
        for (const auto& path : fan)
            for (size_t i = 0; i + 1 < path.size(); ++i)
                t.edges.emplace_back(path[i], path[i + 1]);
        t.normalize();
        return t;
    }
    throw std::logic_error("fan_tree: no fan found despite kappa >= 3");
}

} // namespace pst
