#include "pst/construct.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "pst/connectivity.hpp"
#include "pst/families.hpp"

namespace pst {

Packing path_case_packing_ell(const Graph& ambient, const std::vector<Vertex>& g_path,
                              const TerminalSet& s, const Packing& h_packing, int ell,
                              const SearchLimits& limits);

namespace {

// Vertex sequence between two vertices of a tree given as an edge list.
std::vector<Vertex> tree_path(const std::vector<VertexPair>& edges, Vertex from, Vertex to) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const VertexPair& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::map<Vertex, Vertex> prev;
    prev[from] = from;
    std::vector<Vertex> queue{from};
    for (size_t i = 0; i < queue.size() && !prev.count(to); ++i)
        for (Vertex w : adj[queue[i]])
            if (!prev.count(w)) {
                prev[w] = queue[i];
                queue.push_back(w);
            }
    if (!prev.count(to)) throw std::invalid_argument("tree_path: vertices not connected in tree");
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Product edges of a G-path at a fixed H-level.
void add_rung(std::vector<VertexPair>& out, const Graph& p, const std::vector<Vertex>& g_seq,
              Vertex h_level) {
    for (size_t i = 0; i + 1 < g_seq.size(); ++i)
        out.emplace_back(p.product_vertex(g_seq[i], h_level),
                         p.product_vertex(g_seq[i + 1], h_level));
}

// Product edges of an H-path inside one copy.
void add_copy_path(std::vector<VertexPair>& out, const Graph& p, Vertex g_copy,
                   const std::vector<Vertex>& h_seq) {
    for (size_t i = 0; i + 1 < h_seq.size(); ++i)
        out.emplace_back(p.product_vertex(g_copy, h_seq[i]),
                         p.product_vertex(g_copy, h_seq[i + 1]));
}

void add_copy_edges(std::vector<VertexPair>& out, const Graph& p, Vertex g_copy,
                    const std::vector<VertexPair>& h_edges) {
    for (const VertexPair& e : h_edges)
        out.emplace_back(p.product_vertex(g_copy, e.a), p.product_vertex(g_copy, e.b));
}

// BFS-union tree spanning the targets inside h.
std::vector<VertexPair> connecting_tree(const Graph& h, std::vector<Vertex> targets) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<int> prev(h.order(), -2);
    prev[targets.front()] = -1;
    std::vector<Vertex> queue{targets.front()};
    for (size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : h.neighbors(queue[i]))
            if (prev[w] == -2) {
                prev[w] = queue[i];
                queue.push_back(w);
            }
    std::set<VertexPair> edges;
    std::set<Vertex> kept{targets.front()};
    for (Vertex t : targets) {
        if (prev[t] == -2)
            throw std::invalid_argument("connecting_tree: target unreachable");
        for (Vertex v = t; prev[v] != -1 && !kept.count(v); v = prev[v]) {
            edges.insert(VertexPair(v, prev[v]));
            kept.insert(v);
        }
    }
    return {edges.begin(), edges.end()};
}

std::vector<Vertex> shortest_path(const Graph& h, Vertex a, Vertex b) {
    std::vector<int> prev(h.order(), -2);
    prev[a] = -1;
    std::vector<Vertex> queue{a};
    for (size_t i = 0; i < queue.size() && prev[b] == -2; ++i)
        for (Vertex w : h.neighbors(queue[i]))
            if (prev[w] == -2) {
                prev[w] = queue[i];
                queue.push_back(w);
            }
    if (prev[b] == -2) throw std::invalid_argument("shortest_path: not connected");
    std::vector<Vertex> path{b};
    while (prev[path.back()] != -1) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Inclusive slice of a path sequence between two of its entries.
std::vector<Vertex> slice(const std::vector<Vertex>& seq, Vertex from, Vertex to) {
    auto fi = std::find(seq.begin(), seq.end(), from);
    auto ti = std::find(seq.begin(), seq.end(), to);
    if (fi == seq.end() || ti == seq.end()) throw std::logic_error("slice: vertex not on path");
    std::vector<Vertex> out;
    if (fi <= ti)
        out.assign(fi, ti + 1);
    else {
        out.assign(ti, fi + 1);
        std::reverse(out.begin(), out.end());
    }
    return out;
}

PendantTree make_tree(const TerminalSet& s, std::vector<VertexPair> edges,
                      std::optional<Vertex> root = std::nullopt) {
    PendantTree t;
    t.terminals = s;
    t.edges = std::move(edges);
    t.root = root;
    t.normalize();
    return t;
}

bool internally_disjoint(const PendantTree& a, const PendantTree& b, const TerminalSet& s) {
    std::set<VertexPair> ea(a.edges.begin(), a.edges.end());
    for (const VertexPair& e : b.edges)
        if (ea.count(e)) return false;
    auto va = a.vertex_set();
    for (Vertex v : b.vertex_set())
        if (!s.contains(v) && std::binary_search(va.begin(), va.end(), v)) return false;
    return true;
}

Packing verified_or_throw(const Graph& host, Packing p, const char* what) {
    Verdict v = verify_packing(host, p);
    if (!v.ok) throw std::logic_error(std::string(what) + ": construction invalid: " + v.violation);
    p.verified = true;
    return p;
}

// Rooted cores of a packing's trees (3-terminal packings only).
std::vector<PendantTree> rooted_cores(const Packing& packing) {
    std::vector<PendantTree> cores;
    for (const PendantTree& t : packing.trees) cores.push_back(prune_to_core(t));
    return cores;
}

// Internally disjoint a-b paths of length >= 2 in h, most `want` of them.
std::vector<std::vector<Vertex>> long_disjoint_paths(const Graph& h, Vertex a, Vertex b,
                                                     int want) {
    auto paths = disjoint_paths(h, a, b, want + 1);
    std::vector<std::vector<Vertex>> usable;
    for (auto& p : paths)
        if (p.size() >= 3) usable.push_back(std::move(p));
    if (static_cast<int>(usable.size()) > want) usable.resize(want);
    return usable;
}

} // namespace

FactorDecomposition decompose(const Graph& product, const TerminalSet& s) {
    if (s.k() != 3) throw std::invalid_argument("decompose expects exactly 3 terminals");
    FactorDecomposition dec;
    for (int i = 0; i < 3; ++i) {
        Vertex t = s.vertices[i];
        if (t < 0 || t >= product.order())
            throw std::invalid_argument("terminal outside the product graph");
        dec.terminals[i] = t;
        dec.g_parts[i] = product.g_part(t);
        dec.h_parts[i] = product.h_part(t);
    }
    dec.anchor_g = dec.g_parts[0];
    for (int i = 0; i < 3; ++i)
        dec.in_anchor[i] = product.product_vertex(dec.anchor_g, dec.h_parts[i]);
    return dec;
}

// ---------------------------------------------------------------------------
// Path-case engine (the P_n [] H constructions).
// ---------------------------------------------------------------------------

namespace {

struct PathCaseContext {
    const Graph& p;
    const Graph& h;
    const std::vector<Vertex>& g_path;
    TerminalSet s;
    std::array<Vertex, 3> terminals;
    std::array<int, 3> pos;     // index of each terminal's copy on the path
    std::array<Vertex, 3> hco;  // H-coordinate of each terminal
};

std::vector<Vertex> path_slice(const std::vector<Vertex>& g_path, int from, int to) {
    std::vector<Vertex> seq;
    int step = from <= to ? 1 : -1;
    for (int i = from;; i += step) {
        seq.push_back(g_path[i]);
        if (i == to) break;
    }
    return seq;
}

Packing resolve_h_packing(const Graph& h, const std::vector<Vertex>& coords,
                          const Packing& given, int ell, const SearchLimits& limits) {
    if (!given.trees.empty()) return given;
    LocalResult local = local_pendant_connectivity(h, TerminalSet(coords), limits);
    Packing packing = local.packing;
    if (ell >= 0 && static_cast<int>(packing.trees.size()) > ell) packing.trees.resize(ell);
    return packing;
}

// All three terminals in one copy: lifted packing plus one transversal tree
// through a neighboring copy.
Packing path_case_same_copy(const PathCaseContext& ctx, const Packing& h_packing, int ell,
                            const SearchLimits& limits) {
    Packing out;
    Packing base = resolve_h_packing(ctx.h, {ctx.hco[0], ctx.hco[1], ctx.hco[2]}, h_packing,
                                     ell, limits);
    Vertex copy = ctx.g_path[ctx.pos[0]];
    for (const PendantTree& t : base.trees) {
        std::vector<VertexPair> edges;
        add_copy_edges(edges, ctx.p, copy, t.edges);
        std::optional<Vertex> root;
        if (t.root) root = ctx.p.product_vertex(copy, *t.root);
        out.trees.push_back(make_tree(ctx.s, std::move(edges), root));
    }
    if (ctx.g_path.size() >= 2) {
        int nbr_pos = ctx.pos[0] + 1 < static_cast<int>(ctx.g_path.size()) ? ctx.pos[0] + 1
                                                                           : ctx.pos[0] - 1;
        Vertex nbr = ctx.g_path[nbr_pos];
        std::vector<VertexPair> edges;
        for (int i = 0; i < 3; ++i)
            edges.emplace_back(ctx.terminals[i], ctx.p.product_vertex(nbr, ctx.hco[i]));
        add_copy_edges(edges, ctx.p, nbr,
                       connecting_tree(ctx.h, {ctx.hco[0], ctx.hco[1], ctx.hco[2]}));
        out.trees.push_back(make_tree(ctx.s, std::move(edges)));
    }
    return out;
}

// Two terminals in one copy, the third elsewhere.
Packing path_case_two_in_copy(const PathCaseContext& ctx, const Packing& h_packing, int ell,
                              const SearchLimits& limits) {
    // Identify the copy pair.
    int lone = -1;
    for (int i = 0; i < 3 && lone == -1; ++i) {
        bool alone = true;
        for (int j = 0; j < 3; ++j)
            if (j != i && ctx.pos[j] == ctx.pos[i]) alone = false;
        if (alone) lone = i;
    }
    std::array<int, 2> pair{};
    int pi = 0;
    for (int i = 0; i < 3; ++i)
        if (i != lone) pair[pi++] = i;

    const int posA = ctx.pos[pair[0]];
    const int posB = ctx.pos[lone];
    const Vertex copyA = ctx.g_path[posA];
    const Vertex copyB = ctx.g_path[posB];
    const auto seg = path_slice(ctx.g_path, posA, posB);
    const Vertex vb = ctx.hco[lone];

    Packing out;
    if (vb != ctx.hco[pair[0]] && vb != ctx.hco[pair[1]]) {
        // Corresponded vertex z' lands outside {x,y}: splice copy-tree legs
        // along rungs at the root levels.
        Packing base = resolve_h_packing(
            ctx.h, {ctx.hco[pair[0]], ctx.hco[pair[1]], vb}, h_packing, ell, limits);
        for (const PendantTree& core : rooted_cores(base)) {
            Vertex w = *core.root;
            std::vector<VertexPair> edges;
            add_copy_path(edges, ctx.p, copyA, tree_path(core.edges, w, ctx.hco[pair[0]]));
            add_copy_path(edges, ctx.p, copyA, tree_path(core.edges, w, ctx.hco[pair[1]]));
            add_rung(edges, ctx.p, seg, w);
            add_copy_path(edges, ctx.p, copyB, tree_path(core.edges, w, vb));
            out.trees.push_back(
                make_tree(ctx.s, std::move(edges), ctx.p.product_vertex(copyA, w)));
        }
    } else {
        // z' coincides with a copy terminal: use internally disjoint paths
        // between the two distinct coordinates, discarding the one possible
        // length-1 path so an interior splice vertex exists.
        const int match = vb == ctx.hco[pair[0]] ? pair[0] : pair[1];
        const int other = match == pair[0] ? pair[1] : pair[0];
        const Vertex a = vb, o = ctx.hco[other];
        int target = ell >= 0 ? ell : std::max(0, local_connectivity(ctx.h, a, o) - 1);
        for (const auto& hp : long_disjoint_paths(ctx.h, a, o, target)) {
            Vertex w = hp[1];
            std::vector<VertexPair> edges;
            add_copy_path(edges, ctx.p, copyA, hp);
            add_rung(edges, ctx.p, seg, w);
            add_copy_path(edges, ctx.p, copyB, slice(hp, a, w));
            out.trees.push_back(
                make_tree(ctx.s, std::move(edges), ctx.p.product_vertex(copyA, w)));
        }
    }
    return out;
}

// Three distinct copies.
Packing path_case_three_copies(const PathCaseContext& ctx, const Packing& h_packing, int ell,
                               const SearchLimits& limits) {
    std::array<int, 3> by_pos{0, 1, 2};
    std::sort(by_pos.begin(), by_pos.end(),
              [&](int a, int b) { return ctx.pos[a] < ctx.pos[b]; });
    const int l = by_pos[0], m = by_pos[1], r = by_pos[2];
    const auto seg_lm = path_slice(ctx.g_path, ctx.pos[l], ctx.pos[m]);
    const auto seg_mr = path_slice(ctx.g_path, ctx.pos[m], ctx.pos[r]);
    const std::array<Vertex, 3> copies{ctx.g_path[ctx.pos[l]], ctx.g_path[ctx.pos[m]],
                                       ctx.g_path[ctx.pos[r]]};
    const std::array<Vertex, 3> coords{ctx.hco[l], ctx.hco[m], ctx.hco[r]};

    Packing out;
    std::set<Vertex> distinct(coords.begin(), coords.end());
    if (distinct.size() == 3) {
        Packing base =
            resolve_h_packing(ctx.h, {coords[0], coords[1], coords[2]}, h_packing, ell, limits);
        for (const PendantTree& core : rooted_cores(base)) {
            Vertex w = *core.root;
            std::vector<VertexPair> edges;
            for (int i = 0; i < 3; ++i)
                add_copy_path(edges, ctx.p, copies[i], tree_path(core.edges, w, coords[i]));
            add_rung(edges, ctx.p, seg_lm, w);
            add_rung(edges, ctx.p, seg_mr, w);
            out.trees.push_back(
                make_tree(ctx.s, std::move(edges), ctx.p.product_vertex(copies[1], w)));
        }
    } else if (distinct.size() == 2) {
        // Exactly two corresponded coordinates coincide.
        Vertex a = -1, o = -1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (coords[i] == coords[j]) a = coords[i];
        for (Vertex c : coords)
            if (c != a) o = c;
        int target = ell >= 0 ? ell : std::max(0, local_connectivity(ctx.h, a, o) - 1);
        for (const auto& hp : long_disjoint_paths(ctx.h, a, o, target)) {
            Vertex w = hp[1];
            std::vector<VertexPair> edges;
            for (int i = 0; i < 3; ++i)
                add_copy_path(edges, ctx.p, copies[i], slice(hp, coords[i], w));
            add_rung(edges, ctx.p, seg_lm, w);
            add_rung(edges, ctx.p, seg_mr, w);
            out.trees.push_back(
                make_tree(ctx.s, std::move(edges), ctx.p.product_vertex(copies[1], w)));
        }
    } else {
        // All three project to one H-vertex: fan out over its neighbors.
        Vertex star = coords[0];
        int target = ell >= 0 ? ell : std::max(0, ctx.h.degree(star) - 1);
        int count = std::min(target + 1, ctx.h.degree(star));
        const auto& nbrs = ctx.h.neighbors(star);
        for (int idx = 0; idx < count; ++idx) {
            Vertex lvl = nbrs[idx];
            std::vector<VertexPair> edges;
            for (int i = 0; i < 3; ++i)
                edges.emplace_back(ctx.p.product_vertex(copies[i], star),
                                   ctx.p.product_vertex(copies[i], lvl));
            add_rung(edges, ctx.p, seg_lm, lvl);
            add_rung(edges, ctx.p, seg_mr, lvl);
            out.trees.push_back(
                make_tree(ctx.s, std::move(edges), ctx.p.product_vertex(copies[1], lvl)));
        }
    }
    return out;
}

} // namespace

Packing path_case_packing(const Graph& ambient, const std::vector<Vertex>& g_path,
                          const TerminalSet& s, const Packing& h_packing,
                          const SearchLimits& limits) {
    return path_case_packing_ell(ambient, g_path, s, h_packing, -1, limits);
}

Packing path_case_packing_ell(const Graph& ambient, const std::vector<Vertex>& g_path,
                              const TerminalSet& s, const Packing& h_packing, int ell,
                              const SearchLimits& limits) {
    if (s.k() != 3) throw std::invalid_argument("path-case construction expects |S| = 3");
    PathCaseContext ctx{ambient, ambient.factor_h(), g_path, s, {}, {}, {}};
    for (int i = 0; i < 3; ++i) {
        ctx.terminals[i] = s.vertices[i];
        Vertex gp = ambient.g_part(s.vertices[i]);
        auto it = std::find(g_path.begin(), g_path.end(), gp);
        if (it == g_path.end())
            throw std::invalid_argument("terminal does not project onto the given path");
        ctx.pos[i] = static_cast<int>(it - g_path.begin());
        ctx.hco[i] = ambient.h_part(s.vertices[i]);
    }
    std::set<int> positions(ctx.pos.begin(), ctx.pos.end());
    Packing packing;
    if (positions.size() == 1)
        packing = path_case_same_copy(ctx, h_packing, ell, limits);
    else if (positions.size() == 2)
        packing = path_case_two_in_copy(ctx, h_packing, ell, limits);
    else
        packing = path_case_three_copies(ctx, h_packing, ell, limits);
    return verified_or_throw(ambient, std::move(packing), "path-case packing");
}

PathProductResult construct_path_product(int path_len, const Graph& h, const TerminalSet& s,
                                         const Packing& h_packing, const SearchLimits& limits) {
    if (path_len < 1) throw std::invalid_argument("path length must be >= 1");
    if (h.order() == 0) throw std::invalid_argument("H must be nonempty");
    if (!h_packing.trees.empty() && !h_packing.verified)
        throw std::invalid_argument("h_packing must be verified");
    Graph product = cartesian_product(path_graph(path_len), h);
    std::vector<Vertex> g_path(path_len);
    for (int i = 0; i < path_len; ++i) g_path[i] = i;
    int ell = h_packing.trees.empty() ? -1 : static_cast<int>(h_packing.trees.size());
    Packing packing = path_case_packing_ell(product, g_path, s, h_packing, ell, limits);
    return {std::move(product), std::move(packing)};
}

// ---------------------------------------------------------------------------
// Pair construction: 3 trees inside (T1 u T2) [] (T1' u T2').
// ---------------------------------------------------------------------------

Packing construct_pair_product(const Graph& product, const PendantTree& g_tree1,
                               const PendantTree& g_tree2, const PendantTree& h_tree1,
                               const PendantTree& h_tree2, const FactorDecomposition& dec) {
    const Graph& G = product.factor_g();
    const Graph& H = product.factor_h();
    TerminalSet s({dec.terminals[0], dec.terminals[1], dec.terminals[2]});

    std::set<Vertex> gset(dec.g_parts.begin(), dec.g_parts.end());
    if (gset.size() != 3)
        throw std::invalid_argument(
            "degenerate G-projection: coincident copies are handled at the theorem level");
    TerminalSet g_terms({dec.g_parts[0], dec.g_parts[1], dec.g_parts[2]});
    for (const PendantTree* t : {&g_tree1, &g_tree2}) {
        if (!t->root) throw std::invalid_argument("G-side trees must be rooted");
        if (!(t->terminals == g_terms))
            throw std::invalid_argument("G-side trees must connect the three projections");
        Verdict v = verify_pendant_tree(G, *t);
        if (!v.ok) throw std::invalid_argument("G-side tree invalid: " + v.violation);
    }
    if (!internally_disjoint(g_tree1, g_tree2, g_terms))
        throw std::invalid_argument("G-side trees are not internally disjoint");

    const Vertex rootA = *g_tree1.root, rootB = *g_tree2.root;
    auto g_leg = [&](const PendantTree& t, Vertex term) {
        return tree_path(t.edges, term, *t.root);
    };

    std::set<Vertex> hset(dec.h_parts.begin(), dec.h_parts.end());
    Packing out;

    if (hset.size() == 3) {
        // Case 1: x, y', z' distinct. H-side trees are rooted tripods on them.
        TerminalSet h_terms({dec.h_parts[0], dec.h_parts[1], dec.h_parts[2]});
        for (const PendantTree* t : {&h_tree1, &h_tree2}) {
            if (!t->root) throw std::invalid_argument("H-side trees must be rooted");
            if (!(t->terminals == h_terms))
                throw std::invalid_argument("H-side trees must connect x, y', z'");
            Verdict v = verify_pendant_tree(H, *t);
            if (!v.ok) throw std::invalid_argument("H-side tree invalid: " + v.violation);
        }
        if (!internally_disjoint(h_tree1, h_tree2, h_terms))
            throw std::invalid_argument("H-side trees are not internally disjoint");
        const Vertex rootC = *h_tree1.root, rootD = *h_tree2.root;
        auto h_leg = [&](const PendantTree& t, Vertex term) {
            return tree_path(t.edges, term, *t.root);
        };

        std::vector<VertexPair> e1, e2, e3;
        for (int i = 0; i < 3; ++i) {
            const Vertex u = dec.g_parts[i], v = dec.h_parts[i];
            // Tree 1: rungs of T1 at the terminal levels, T1' legs in H(rootA).
            add_rung(e1, product, g_leg(g_tree1, u), v);
            add_copy_path(e1, product, rootA, h_leg(h_tree1, v));
            // Tree 2: same pattern on T2 and T2'.
            add_rung(e2, product, g_leg(g_tree2, u), v);
            add_copy_path(e2, product, rootB, h_leg(h_tree2, v));
            // Tree 3: T2' legs inside the terminal copies, T1 rungs at rootD.
            add_copy_path(e3, product, u, h_leg(h_tree2, v));
            add_rung(e3, product, g_leg(g_tree1, u), rootD);
        }
        out.trees.push_back(make_tree(s, std::move(e1), product.product_vertex(rootA, rootC)));
        out.trees.push_back(make_tree(s, std::move(e2), product.product_vertex(rootB, rootD)));
        out.trees.push_back(make_tree(s, std::move(e3), product.product_vertex(rootA, rootD)));
    } else if (hset.size() == 2) {
        // Case 2: two of x, y', z' coincide. H-side material: two internally
        // disjoint paths between the shared and the odd coordinate.
        int odd = -1;
        for (int i = 0; i < 3 && odd == -1; ++i) {
            bool alone = true;
            for (int j = 0; j < 3; ++j)
                if (j != i && dec.h_parts[j] == dec.h_parts[i]) alone = false;
            if (alone) odd = i;
        }
        const Vertex a = dec.h_parts[(odd + 1) % 3], o = dec.h_parts[odd];
        TerminalSet path_terms({a, o});
        for (const PendantTree* t : {&h_tree1, &h_tree2}) {
            PendantTree asPath = *t;
            asPath.terminals = path_terms;
            asPath.root.reset();
            Verdict v = verify_pendant_tree(H, asPath);
            if (!v.ok) throw std::invalid_argument("H-side path invalid: " + v.violation);
        }
        std::vector<Vertex> pseq = tree_path(h_tree1.edges, a, o);
        std::vector<Vertex> qseq = tree_path(h_tree2.edges, a, o);
        if (pseq.size() < 3) std::swap(pseq, qseq); // ensure the spliced path has an interior
        if (pseq.size() < 3)
            throw std::invalid_argument("both H-side paths have length 1; impossible input");
        const Vertex w = pseq[1];

        auto star_tree = [&](const PendantTree& gt, Vertex groot,
                             const std::vector<Vertex>& through) {
            // Rungs at the shared level to each pair terminal, the `through`
            // H-path in the root copy, and a rung back down to the odd one.
            std::vector<VertexPair> edges;
            for (int i = 0; i < 3; ++i) {
                if (i == odd) continue;
                add_rung(edges, product, g_leg(gt, dec.g_parts[i]), a);
            }
            add_copy_path(edges, product, groot, through);
            add_rung(edges, product, g_leg(gt, dec.g_parts[odd]), o);
            return make_tree(s, std::move(edges), product.product_vertex(groot, a));
        };
        out.trees.push_back(star_tree(g_tree1, rootA, qseq));
        out.trees.push_back(star_tree(g_tree2, rootB, qseq));

        std::vector<VertexPair> e3;
        for (int i = 0; i < 3; ++i) {
            add_copy_path(e3, product, dec.g_parts[i], slice(pseq, dec.h_parts[i], w));
            add_rung(e3, product, g_leg(g_tree1, dec.g_parts[i]), w);
        }
        out.trees.push_back(make_tree(s, std::move(e3), product.product_vertex(rootA, w)));
    } else {
        // Case 3: x, y', z' all coincide; pin one neighbor of the common
        // vertex inside T1'.
        const Vertex star = dec.h_parts[0];
        Vertex nb = -1;
        for (const VertexPair& e : h_tree1.edges) {
            if (e.a == star) nb = nb == -1 ? e.b : std::min(nb, e.b);
            if (e.b == star) nb = nb == -1 ? e.a : std::min(nb, e.a);
        }
        if (nb == -1)
            throw std::invalid_argument("H-side tree does not touch the common vertex");
        if (!H.has_edge(star, nb)) throw std::invalid_argument("H-side edge missing from H");

        std::vector<VertexPair> e1, e2, e3;
        for (int i = 0; i < 3; ++i) {
            add_rung(e1, product, g_leg(g_tree1, dec.g_parts[i]), star);
            add_rung(e2, product, g_leg(g_tree2, dec.g_parts[i]), star);
            e3.emplace_back(product.product_vertex(dec.g_parts[i], star),
                            product.product_vertex(dec.g_parts[i], nb));
            add_rung(e3, product, g_leg(g_tree1, dec.g_parts[i]), nb);
        }
        out.trees.push_back(make_tree(s, std::move(e1), product.product_vertex(rootA, star)));
        out.trees.push_back(make_tree(s, std::move(e2), product.product_vertex(rootB, star)));
        out.trees.push_back(make_tree(s, std::move(e3), product.product_vertex(rootA, nb)));
    }
    return verified_or_throw(product, std::move(out), "pair construction");
}

// ---------------------------------------------------------------------------
// Theorem assembly.
// ---------------------------------------------------------------------------

namespace {

// Packing in the work product (k <= l orientation), case 1: all terminals in
// one copy.
Packing theorem_same_copy(const Graph& work, const FactorDecomposition& dec,
                          const TerminalSet& s, int k, int l, const SearchLimits& limits) {
    const Graph& G = work.factor_g();
    const Graph& H = work.factor_h();
    const Vertex u1 = dec.g_parts[0];
    std::vector<Vertex> coords{dec.h_parts[0], dec.h_parts[1], dec.h_parts[2]};

    Packing out;
    const auto& nbrs = G.neighbors(u1);
    const int transversals = std::min<int>(k + 2, static_cast<int>(nbrs.size()));
    const auto htree = connecting_tree(H, coords);
    for (int i = 0; i < transversals; ++i) {
        Vertex w = nbrs[i];
        std::vector<VertexPair> edges;
        for (int j = 0; j < 3; ++j)
            edges.emplace_back(dec.terminals[j], work.product_vertex(w, dec.h_parts[j]));
        add_copy_edges(edges, work, w, htree);
        out.trees.push_back(make_tree(s, std::move(edges)));
    }
    LocalResult local = local_pendant_connectivity(H, TerminalSet(coords), limits);
    int take = std::min<int>(l, local.packing.size());
    for (int i = 0; i < take; ++i) {
        const PendantTree& t = local.packing.trees[i];
        std::vector<VertexPair> edges;
        add_copy_edges(edges, work, u1, t.edges);
        std::optional<Vertex> root;
        if (t.root) root = work.product_vertex(u1, *t.root);
        out.trees.push_back(make_tree(s, std::move(edges), root));
    }
    return out;
}

// Case 2: two terminals in one copy, the third in another.
Packing theorem_two_in_copy(const Graph& work, const FactorDecomposition& dec,
                            const TerminalSet& s, int k, int l, const SearchLimits& limits,
                            std::string& notes) {
    const Graph& G = work.factor_g();
    const Graph& H = work.factor_h();
    int lone = -1;
    for (int i = 0; i < 3 && lone == -1; ++i) {
        bool alone = true;
        for (int j = 0; j < 3; ++j)
            if (j != i && dec.g_parts[j] == dec.g_parts[i]) alone = false;
        if (alone) lone = i;
    }
    std::array<int, 2> pair{};
    int pi = 0;
    for (int i = 0; i < 3; ++i)
        if (i != lone) pair[pi++] = i;
    const Vertex uA = dec.g_parts[pair[0]], uB = dec.g_parts[lone];

    auto paths = disjoint_paths(G, uA, uB, k + 1);
    // The possible direct edge goes last and is the one the path-product
    // machinery runs on; the remaining paths all have interior vertices.
    std::stable_sort(paths.begin(), paths.end(),
                     [](const auto& p1, const auto& p2) { return p1.size() > p2.size(); });
    if (paths.empty()) throw std::logic_error("connected factors admit at least one path");

    const std::vector<Vertex> main_path = paths.back();
    Packing h_packing; // resolved inside the engine
    Packing out = path_case_packing_ell(work, main_path, s, h_packing, l, limits);
    out.verified = false;

    const Vertex va1 = dec.h_parts[pair[0]], va2 = dec.h_parts[pair[1]];
    const Vertex vb = dec.h_parts[lone];
    int built = 0;
    for (size_t i = 0; i + 1 < paths.size() && built < k; ++i) {
        const auto& gp = paths[i];
        if (gp.size() < 3) continue; // needs an interior vertex
        const Vertex mid = gp[1];
        std::vector<Vertex> tail(gp.begin() + 1, gp.end()); // mid .. uB
        std::vector<VertexPair> edges;
        if (vb != va1 && vb != va2) {
            long long budget = limits.max_nodes;
            DecideResult one = decide_packing(H, TerminalSet({va1, va2, vb}), 1, budget);
            if (one.status != DecideStatus::Yes)
                throw std::logic_error("tau_3(H) >= 1 but no in-copy tree found");
            Packing copy_tree = packing_from_classes(H, TerminalSet({va1, va2, vb}), one.classes);
            add_copy_edges(edges, work, mid, copy_tree.trees.front().edges);
        } else {
            add_copy_path(edges, work, mid, shortest_path(H, va1, va2));
        }
        edges.emplace_back(dec.terminals[pair[0]], work.product_vertex(mid, va1));
        edges.emplace_back(dec.terminals[pair[1]], work.product_vertex(mid, va2));
        add_rung(edges, work, tail, vb);
        out.trees.push_back(make_tree(s, std::move(edges)));
        ++built;
    }

    // The two families are disjoint by construction; verify anyway and
    // greedily drop offenders if they ever collide.
    Packing kept;
    for (PendantTree& t : out.trees) {
        bool ok = verify_pendant_tree(work, t).ok;
        for (const PendantTree& other : kept.trees)
            if (!ok || !internally_disjoint(t, other, s)) {
                ok = false;
                break;
            }
        if (ok) kept.trees.push_back(std::move(t));
        else notes += "dropped one colliding case-2 tree; ";
    }
    return kept;
}

// Case 3: terminals in three distinct copies; floor(k/2) pair constructions.
Packing theorem_distinct_copies(const Graph& work, const FactorDecomposition& dec, int k,
                                const SearchLimits& limits) {
    const Graph& G = work.factor_g();
    const Graph& H = work.factor_h();
    Packing out;
    const int pairs = k / 2;
    if (pairs == 0) return out;

    TerminalSet g_terms({dec.g_parts[0], dec.g_parts[1], dec.g_parts[2]});
    LocalResult g_local = local_pendant_connectivity(G, g_terms, limits);
    const int g_avail = std::min<int>(k, g_local.packing.size());
    const int usable_pairs = std::min(pairs, g_avail / 2);
    std::vector<PendantTree> g_trees(g_local.packing.trees.begin(),
                                     g_local.packing.trees.begin() + 2 * usable_pairs);

    std::set<Vertex> hset(dec.h_parts.begin(), dec.h_parts.end());
    std::vector<std::pair<PendantTree, PendantTree>> h_material;
    if (hset.size() == 3) {
        TerminalSet h_terms({dec.h_parts[0], dec.h_parts[1], dec.h_parts[2]});
        LocalResult h_local = local_pendant_connectivity(H, h_terms, limits);
        int have = std::min<int>(2 * usable_pairs, h_local.packing.size());
        for (int i = 0; i + 1 < have; i += 2)
            h_material.emplace_back(h_local.packing.trees[i], h_local.packing.trees[i + 1]);
    } else if (hset.size() == 2) {
        Vertex a = -1, o = -1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (dec.h_parts[i] == dec.h_parts[j]) a = dec.h_parts[i];
        for (Vertex c : dec.h_parts)
            if (c != a) o = c;
        auto paths = disjoint_paths(H, a, o, 2 * usable_pairs + 1);
        // Within each pair the first path needs an interior vertex; push the
        // single possible direct edge to a second slot.
        std::stable_sort(paths.begin(), paths.end(), [](const auto& p1, const auto& p2) {
            return p1.size() > p2.size();
        });
        if (paths.size() >= 2 && paths.back().size() < 3)
            std::swap(paths[1], paths.back());
        for (size_t i = 0; i + 1 < paths.size() && h_material.size() < static_cast<size_t>(usable_pairs);
             i += 2) {
            PendantTree p1, p2;
            for (size_t j = 0; j + 1 < paths[i].size(); ++j)
                p1.edges.emplace_back(paths[i][j], paths[i][j + 1]);
            for (size_t j = 0; j + 1 < paths[i + 1].size(); ++j)
                p2.edges.emplace_back(paths[i + 1][j], paths[i + 1][j + 1]);
            p1.terminals = TerminalSet({a, o});
            p2.terminals = TerminalSet({a, o});
            p1.normalize();
            p2.normalize();
            h_material.emplace_back(std::move(p1), std::move(p2));
        }
    } else {
        const Vertex star = dec.h_parts[0];
        const auto& nbrs = H.neighbors(star);
        for (int i = 0; i + 1 < static_cast<int>(nbrs.size()) &&
                        h_material.size() < static_cast<size_t>(usable_pairs);
             i += 2) {
            PendantTree p1, p2;
            p1.edges.emplace_back(star, nbrs[i]);
            p2.edges.emplace_back(star, nbrs[i + 1]);
            h_material.emplace_back(std::move(p1), std::move(p2));
        }
    }

    const size_t n_pairs = std::min<size_t>(h_material.size(), g_trees.size() / 2);
    for (size_t i = 0; i < n_pairs; ++i) {
        Packing triple = construct_pair_product(work, g_trees[2 * i], g_trees[2 * i + 1],
                                                h_material[i].first, h_material[i].second, dec);
        for (PendantTree& t : triple.trees) out.trees.push_back(std::move(t));
    }
    return out;
}

} // namespace

TheoremConstruction construct_theorem_packing(const Graph& g, const Graph& h,
                                              const TerminalSet& s, const SearchLimits& limits) {
    TheoremConstruction result;
    result.product = cartesian_product(g, h);
    if (s.k() != 3) throw std::invalid_argument("theorem construction expects |S| = 3");
    for (Vertex v : s.vertices)
        if (v < 0 || v >= result.product.order())
            throw std::invalid_argument("terminal outside the product");

    GlobalResult tg = pendant_tree_connectivity(g, 3, limits);
    GlobalResult th = pendant_tree_connectivity(h, 3, limits);
    result.exact_factors = tg.exact && th.exact;
    result.swapped = th.value < tg.value;
    result.k = std::min(tg.value, th.value);
    result.l = std::max(tg.value, th.value);
    result.bound = 3 * (result.k / 2);

    Graph work = result.swapped ? cartesian_product(h, g) : result.product;
    std::vector<Vertex> work_terms;
    for (Vertex v : s.vertices) {
        Vertex gp = result.product.g_part(v), hp = result.product.h_part(v);
        work_terms.push_back(result.swapped ? work.product_vertex(hp, gp) : v);
    }
    TerminalSet ws(work_terms);
    FactorDecomposition dec = decompose(work, ws);

    std::set<Vertex> gset(dec.g_parts.begin(), dec.g_parts.end());
    Packing packing;
    if (gset.size() == 1) {
        result.case_id = 1;
        packing = theorem_same_copy(work, dec, ws, result.k, result.l, limits);
    } else if (gset.size() == 2) {
        result.case_id = 2;
        packing = theorem_two_in_copy(work, dec, ws, result.k, result.l, limits, result.notes);
    } else {
        result.case_id = 3;
        packing = theorem_distinct_copies(work, dec, result.k, limits);
    }

    if (result.swapped) {
        Packing remapped;
        for (const PendantTree& t : packing.trees) {
            PendantTree rt;
            rt.terminals = s;
            for (const VertexPair& e : t.edges)
                rt.edges.emplace_back(
                    result.product.product_vertex(work.h_part(e.a), work.g_part(e.a)),
                    result.product.product_vertex(work.h_part(e.b), work.g_part(e.b)));
            if (t.root)
                rt.root = result.product.product_vertex(work.h_part(*t.root),
                                                        work.g_part(*t.root));
            rt.normalize();
            remapped.trees.push_back(std::move(rt));
        }
        packing = std::move(remapped);
    } else {
        for (PendantTree& t : packing.trees) t.terminals = s;
    }
    result.packing = verified_or_throw(result.product, std::move(packing), "theorem packing");
    return result;
}

ProbeReport sharpness_probe(const Graph& g, const Graph& h, const SearchLimits& limits) {
    ProbeReport report;
    GlobalResult tg = pendant_tree_connectivity(g, 3, limits);
    GlobalResult th = pendant_tree_connectivity(h, 3, limits);
    report.tau_g = tg.value;
    report.tau_h = th.value;
    report.factors_exact = tg.exact && th.exact;
    report.bound = std::min(3 * (tg.value / 2), 3 * (th.value / 2));
    Graph product = cartesian_product(g, h);
    if (product.order() <= 60) {
        GlobalResult tp = pendant_tree_connectivity(product, 3, limits);
        report.tau_product = tp.value;
        report.product_exact = tp.exact;
        report.bound_holds = tp.value >= report.bound;
        report.tight = tp.value == report.bound;
    }
    return report;
}

} // namespace pst
