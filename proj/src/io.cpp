#include "pst/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pst {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["name"] = g.name();
    j["vertices"] = json::array();
    for (Vertex v = 0; v < g.order(); ++v) j["vertices"].push_back(g.label(v));
    j["edges"] = json::array();
    for (const VertexPair& e : g.edges())
        j["edges"].push_back(json::array({g.label(e.a), g.label(e.b)}));
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs 'vertices' and 'edges'");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a [a,b] pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(j.value("name", std::string("graph")), std::move(labels), edges);
}

Graph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    json j;
    in >> j;
    return graph_from_json(j);
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph \"" << g.name() << "\" {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        os << "  n" << v << " [label=\"" << g.label(v) << "\"];\n";
    for (const VertexPair& e : g.edges()) os << "  n" << e.a << " -- n" << e.b << ";\n";
    os << "}\n";
    return os.str();
}

json packing_to_json(const Graph& g, const Packing& p) {
    json trees = json::array();
    for (const PendantTree& t : p.trees) {
        json jt;
        jt["edges"] = json::array();
        for (const VertexPair& e : t.edges)
            jt["edges"].push_back(json::array({g.label(e.a), g.label(e.b)}));
        jt["root"] = t.root ? json(g.label(*t.root)) : json(nullptr);
        trees.push_back(std::move(jt));
    }
    json j;
    j["terminals"] = json::array();
    if (!p.trees.empty())
        for (Vertex s : p.trees.front().terminals.vertices) j["terminals"].push_back(g.label(s));
    j["trees"] = std::move(trees);
    j["verified"] = p.verified;
    return j;
}

Packing packing_from_json(const Graph& g, const json& j) {
    auto resolve = [&](const std::string& label) {
        auto v = g.find_label(label);
        if (!v) throw std::invalid_argument("packing names unknown vertex '" + label + "'");
        return *v;
    };
    std::vector<Vertex> terminals;
    for (const auto& t : j.at("terminals")) terminals.push_back(resolve(t.get<std::string>()));
    TerminalSet s(terminals);
    Packing p;
    for (const auto& jt : j.at("trees")) {
        PendantTree t;
        t.terminals = s;
        for (const auto& e : jt.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("each tree edge must be a [a,b] pair");
            t.edges.emplace_back(resolve(e[0].get<std::string>()), resolve(e[1].get<std::string>()));
        }
        if (jt.contains("root") && !jt.at("root").is_null())
            t.root = resolve(jt.at("root").get<std::string>());
        t.normalize();
        p.trees.push_back(std::move(t));
    }
    return p;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["ok"] = v.ok;
    j["violation"] = v.violation;
    return j;
}

namespace {
const char* kind_name(BoundEntry::Kind k) {
    switch (k) {
        case BoundEntry::Kind::Lower: return "lower";
        case BoundEntry::Kind::Upper: return "upper";
        default: return "note";
    }
}
} // namespace

json ledger_to_json(const BoundLedger& ledger) {
    json rows = json::array();
    for (const auto& e : ledger.entries) {
        json row;
        row["graph"] = ledger.graph_name;
        row["k"] = ledger.k;
        row["bound"] = e.name;
        row["kind"] = kind_name(e.kind);
        row["value"] = e.value;
        row["provenance"] = e.provenance;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string ledger_to_csv(const BoundLedger& ledger) {
    std::ostringstream os;
    os << "graph,k,bound,kind,value,provenance\n";
    for (const auto& e : ledger.entries)
        os << ledger.graph_name << ',' << ledger.k << ',' << e.name << ',' << kind_name(e.kind)
           << ',' << e.value << ",\"" << e.provenance << "\"\n";
    return os.str();
}

std::string packing_to_dot(const Graph& g, const Packing& p) {
    static const char* palette[] = {"red",    "blue",   "darkgreen", "orange", "purple",
                                    "brown",  "cyan4",  "magenta",   "gold3",  "navy"};
    std::ostringstream os;
    os << "graph \"" << g.name() << "-packing\" {\n";
    std::vector<int> tree_of(g.order(), -1);
    for (size_t i = 0; i < p.trees.size(); ++i)
        for (Vertex v : p.trees[i].vertex_set())
            if (!p.trees[i].terminals.contains(v)) tree_of[v] = static_cast<int>(i);
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "  n" << v << " [label=\"" << g.label(v) << "\"";
        if (!p.trees.empty() && p.trees.front().terminals.contains(v))
            os << ", shape=doublecircle";
        else if (tree_of[v] >= 0)
            os << ", color=" << palette[tree_of[v] % 10];
        os << "];\n";
    }
    std::map<VertexPair, int> edge_tree;
    for (size_t i = 0; i < p.trees.size(); ++i)
        for (const VertexPair& e : p.trees[i].edges) edge_tree[e] = static_cast<int>(i);
    for (const VertexPair& e : g.edges()) {
        os << "  n" << e.a << " -- n" << e.b;
        auto it = edge_tree.find(e);
        if (it != edge_tree.end())
            os << " [color=" << palette[it->second % 10] << ", penwidth=2]";
        else
            os << " [color=gray80]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace pst
