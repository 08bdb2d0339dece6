#include "pst/connectivity.hpp"

#include <queue>
#include <stdexcept>

namespace pst {

namespace {

// Minimal max-flow network; paired reverse edge lives at index idx^1.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
    };
    int n;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int n) : n(n), out(n) {}

    void add(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    // One augmenting unit along a shortest residual path; false if none.
    bool augment(int s, int t) {
        std::vector<int> parent_arc(n, -1);
        parent_arc[s] = -2;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent_arc[t] == -1) {
            int v = q.front();
            q.pop();
            for (int idx : out[v]) {
                if (arcs[idx].cap <= 0) continue;
                int w = arcs[idx].to;
                if (parent_arc[w] != -1) continue;
                parent_arc[w] = idx;
                q.push(w);
            }
        }
        if (parent_arc[t] == -1) return false;
        for (int v = t; v != s;) {
            int idx = parent_arc[v];
            arcs[idx].cap -= 1;
            arcs[idx ^ 1].cap += 1;
            v = arcs[idx ^ 1].to;
        }
        return true;
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && augment(s, t)) ++flow;
        return flow;
    }
};

constexpr int kInf = 1 << 20;

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

// Split network for internally disjoint paths; `open` vertices carry no unit
// capacity (endpoints), `blocked` vertices get no in->out arc at all.
FlowNet split_network(const Graph& g, const std::vector<char>& open,
                      const std::vector<char>& blocked, int extra_nodes) {
    FlowNet net(2 * g.order() + extra_nodes);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (blocked[v]) continue;
        net.add(in_node(v), out_node(v), open[v] ? kInf : 1);
    }
    for (const VertexPair& e : g.edges()) {
        net.add(out_node(e.a), in_node(e.b), 1);
        net.add(out_node(e.b), in_node(e.a), 1);
    }
    return net;
}

// Walks unit flow paths out of `source`, translating out(v)->in(w) arcs back
// to graph vertices. Consumes flow as it goes. Unit vertex capacities keep
// every extracted path simple.
std::vector<std::vector<Vertex>> decompose_paths(FlowNet& net, int source, int sink,
                                                 int graph_nodes) {
    std::vector<std::vector<Vertex>> paths;
    while (true) {
        std::vector<Vertex> path;
        int node = source;
        bool moved = false;
        while (node != sink) {
            int chosen = -1;
            for (int idx : net.out[node]) {
                if (idx % 2 != 0) continue;          // forward arcs only
                if (net.arcs[idx ^ 1].cap > 0) {     // reverse residual = carried flow
                    chosen = idx;
                    break;
                }
            }
            if (chosen == -1) break;
            net.arcs[chosen].cap += 1;
            net.arcs[chosen ^ 1].cap -= 1;
            node = net.arcs[chosen].to;
            if (node % 2 == 0 && node < 2 * graph_nodes) path.push_back(node / 2);
            moved = true;
        }
        if (!moved || node != sink) break;
        paths.push_back(std::move(path));
    }
    return paths;
}

} // namespace

int local_connectivity(const Graph& g, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("local_connectivity needs distinct vertices");
    std::vector<char> open(g.order(), 0), blocked(g.order(), 0);
    open[x] = open[y] = 1;
    FlowNet net = split_network(g, open, blocked, 0);
    return net.max_flow(out_node(x), in_node(y), kInf);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!g.is_connected()) return 0;
    int best = n - 1; // complete-graph convention when no non-adjacent pair exists
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            best = std::min(best, local_connectivity(g, x, y));
            if (best == 0) return 0;
        }
    return best;
}

std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex x, Vertex y, int want) {
    if (x == y) throw std::invalid_argument("disjoint_paths needs distinct vertices");
    if (want <= 0) return {};
    std::vector<char> open(g.order(), 0), blocked(g.order(), 0);
    open[x] = open[y] = 1;
    FlowNet net = split_network(g, open, blocked, 0);
    net.max_flow(out_node(x), in_node(y), want);
    auto paths = decompose_paths(net, out_node(x), in_node(y), g.order());
    for (auto& p : paths) {
        p.insert(p.begin(), x);
        // decompose records in-nodes along the way, including y
    }
    return paths;
}

std::vector<std::vector<Vertex>> vertex_fan(const Graph& g, Vertex x,
                                            const std::vector<Vertex>& targets) {
    std::vector<char> open(g.order(), 0), blocked(g.order(), 0);
    open[x] = 1;
    for (Vertex t : targets) {
        if (t == x) throw std::invalid_argument("vertex_fan: x may not be a target");
        blocked[t] = 1; // paths must end at targets, never pass through them
    }
    FlowNet net = split_network(g, open, blocked, 1);
    const int sink = 2 * g.order();
    for (Vertex t : targets) net.add(in_node(t), sink, 1);
    int flow = net.max_flow(out_node(x), sink, static_cast<int>(targets.size()));
    if (flow != static_cast<int>(targets.size())) return {};
    auto raw = decompose_paths(net, out_node(x), sink, g.order());
    for (auto& p : raw) p.insert(p.begin(), x);
    // Order the fan to match the target list.
    std::vector<std::vector<Vertex>> ordered(targets.size());
    for (auto& p : raw) {
        for (size_t i = 0; i < targets.size(); ++i)
            if (!p.empty() && p.back() == targets[i]) {
                ordered[i] = std::move(p);
                break;
            }
    }
    return ordered;
}

} // namespace pst
