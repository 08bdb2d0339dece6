#include "pst/solver.hpp"

#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pst/connectivity.hpp"

namespace pst {

namespace {

// ---------------------------------------------------------------------------
// Class-assignment search. Vertices outside S are assigned to one of `count`
// classes or left out; every class must induce a connected subgraph with a
// neighbor of each terminal. Such an assignment exists iff `count` internally
// disjoint pendant S-Steiner trees do (k >= 3: a pendant tree minus its
// terminals is connected and dominates S, and disjoint classes splice back
// into disjoint trees).
// ---------------------------------------------------------------------------
class ClassSearch {
  public:
    ClassSearch(const Graph& g, const std::vector<Vertex>& terminals, int count,
                long long& budget)
        : g_(g), terminals_(terminals), t_(count), budget_(budget) {
        assign_.assign(g_.order(), kUndecided);
        forbid_.assign(g_.order(), 0);
        for (Vertex s : terminals_) assign_[s] = kTerminal;
    }

    DecideResult run() {
        if (t_ == 0) return {DecideStatus::Yes, {}};
        for (Vertex s : terminals_) {
            int core_deg = 0;
            for (Vertex w : g_.neighbors(s))
                if (assign_[w] != kTerminal) ++core_deg;
            if (core_deg < t_) return {DecideStatus::No, {}};
        }
        if (greedy()) return {DecideStatus::Yes, collect()};
        reset();
        DecideStatus st = search();
        if (st == DecideStatus::Yes) return {st, collect()};
        return {st, {}};
    }

  private:
    static constexpr int kTerminal = -3;
    static constexpr int kUndecided = -2;
    static constexpr int kOut = -1;

    bool allowed(Vertex v, int c) const {
        return assign_[v] == c || (assign_[v] == kUndecided && !(forbid_[v] >> c & 1u));
    }

    void reset() {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (assign_[v] != kTerminal) {
                assign_[v] = kUndecided;
                forbid_[v] = 0;
            }
    }

    // Cheap constructive attempt before the full search: for each class grab
    // the least unused neighbor of every terminal and join them through
    // unused vertices. Sound but incomplete; only a Yes is trusted.
    bool greedy() {
        std::vector<char> used(g_.order(), 0);
        for (Vertex s : terminals_) used[s] = 1;
        for (int c = 0; c < t_; ++c) {
            std::vector<Vertex> picked;
            for (Vertex s : terminals_) {
                Vertex got = -1;
                for (Vertex w : g_.neighbors(s))
                    if (!used[w]) {
                        got = w;
                        break;
                    }
                if (got == -1) return false;
                used[got] = 1;
                if (std::find(picked.begin(), picked.end(), got) == picked.end())
                    picked.push_back(got);
            }
            // Join picked vertices through unused ones (BFS from the first).
            std::vector<int> prev(g_.order(), -2);
            std::vector<Vertex> queue{picked.front()};
            prev[picked.front()] = -1;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                Vertex v = queue[qi];
                for (Vertex w : g_.neighbors(v)) {
                    if (prev[w] != -2) continue;
                    bool in_class = std::find(picked.begin(), picked.end(), w) != picked.end();
                    if (used[w] && !in_class) continue;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
            std::vector<Vertex> members(picked);
            for (Vertex p : picked) {
                if (prev[p] == -2) return false;
                for (Vertex v = p; v != -1; v = prev[v])
                    if (std::find(members.begin(), members.end(), v) == members.end())
                        members.push_back(v);
            }
            for (Vertex v : members) {
                used[v] = 1;
                assign_[v] = c;
            }
        }
        return true;
    }

    std::vector<std::vector<Vertex>> collect() const {
        std::vector<std::vector<Vertex>> classes(t_);
        for (Vertex v = 0; v < g_.order(); ++v)
            if (assign_[v] >= 0) classes[assign_[v]].push_back(v);
        return classes;
    }

    // Relaxed reachability: every started class must keep its fragments in one
    // component of (assigned + still-allowed) vertices, with a potential
    // dominator of every terminal inside that component.
    bool feasible() {
        for (int c = 0; c < t_; ++c) {
            Vertex seed = -1;
            for (Vertex v = 0; v < g_.order() && seed == -1; ++v)
                if (assign_[v] == c) seed = v;
            mark_.assign(g_.order(), 0);
            if (seed == -1) {
                for (Vertex v = 0; v < g_.order(); ++v)
                    if (assign_[v] == kUndecided && allowed(v, c)) mark_[v] = 1;
            } else {
                bfs_.clear();
                bfs_.push_back(seed);
                mark_[seed] = 1;
                for (size_t i = 0; i < bfs_.size(); ++i)
                    for (Vertex w : g_.neighbors(bfs_[i]))
                        if (!mark_[w] && allowed(w, c)) {
                            mark_[w] = 1;
                            bfs_.push_back(w);
                        }
                for (Vertex v = 0; v < g_.order(); ++v)
                    if (assign_[v] == c && !mark_[v]) return false;
            }
            for (Vertex s : terminals_) {
                bool ok = false;
                for (Vertex w : g_.neighbors(s))
                    if (mark_[w] && allowed(w, c)) {
                        ok = true;
                        break;
                    }
                if (!ok) return false;
            }
        }
        return true;
    }

    bool class_done(int c, std::vector<char>& members_mark) const {
        Vertex seed = -1;
        int total = 0;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (assign_[v] == c) {
                if (seed == -1) seed = v;
                ++total;
            }
        if (seed == -1) return false;
        members_mark.assign(g_.order(), 0);
        std::vector<Vertex> stack{seed};
        members_mark[seed] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v))
                if (assign_[w] == c && !members_mark[w]) {
                    members_mark[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != total) return false;
        for (Vertex s : terminals_) {
            bool ok = false;
            for (Vertex w : g_.neighbors(s))
                if (assign_[w] == c) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }

    DecideStatus search() {
        if (--budget_ < 0) return DecideStatus::Budget;
        if (!feasible()) return DecideStatus::No;

        // Pick the most constrained unsatisfied (class, terminal) need.
        int best_c = -1;
        Vertex best_s = -1;
        std::vector<Vertex> best_options;
        bool saw_empty = false;
        std::vector<char> done_mark;
        std::vector<int> fragment_class;
        for (int c = 0; c < t_; ++c) {
            bool empty = true;
            for (Vertex v = 0; v < g_.order() && empty; ++v)
                if (assign_[v] == c) empty = false;
            if (empty) {
                if (saw_empty) continue; // empty classes are interchangeable
                saw_empty = true;
            }
            // Component of allowed vertices around the class (all allowed when
            // the class has not started).
            mark_.assign(g_.order(), 0);
            if (empty) {
                for (Vertex v = 0; v < g_.order(); ++v)
                    if (allowed(v, c) && assign_[v] == kUndecided) mark_[v] = 1;
            } else {
                Vertex seed = -1;
                for (Vertex v = 0; v < g_.order() && seed == -1; ++v)
                    if (assign_[v] == c) seed = v;
                bfs_.clear();
                bfs_.push_back(seed);
                mark_[seed] = 1;
                for (size_t i = 0; i < bfs_.size(); ++i)
                    for (Vertex w : g_.neighbors(bfs_[i]))
                        if (!mark_[w] && allowed(w, c)) {
                            mark_[w] = 1;
                            bfs_.push_back(w);
                        }
            }
            for (Vertex s : terminals_) {
                bool satisfied = false;
                for (Vertex w : g_.neighbors(s))
                    if (assign_[w] == c) {
                        satisfied = true;
                        break;
                    }
                if (satisfied) continue;
                std::vector<Vertex> options;
                for (Vertex w : g_.neighbors(s))
                    if (mark_[w] && assign_[w] == kUndecided && allowed(w, c))
                        options.push_back(w);
                if (options.empty()) return DecideStatus::No;
                if (best_c == -1 || options.size() < best_options.size()) {
                    best_c = c;
                    best_s = s;
                    best_options = std::move(options);
                }
            }
        }
        (void)best_s;

        if (best_c != -1) {
            bool budget_hit = false;
            std::vector<Vertex> touched;
            for (Vertex v : best_options) {
                assign_[v] = best_c;
                DecideStatus st = search();
                assign_[v] = kUndecided;
                if (st == DecideStatus::Yes) {
                    for (Vertex u : touched) forbid_[u] &= ~(1u << best_c);
                    assign_[v] = best_c;
                    return DecideStatus::Yes;
                }
                if (st == DecideStatus::Budget) {
                    budget_hit = true;
                    break;
                }
                forbid_[v] |= 1u << best_c;
                touched.push_back(v);
            }
            for (Vertex u : touched) forbid_[u] &= ~(1u << best_c);
            return budget_hit ? DecideStatus::Budget : DecideStatus::No;
        }

        // All needs satisfied; find a class whose assigned part is still
        // fragmented and branch on a frontier vertex of its first fragment.
        for (int c = 0; c < t_; ++c) {
            std::vector<char> members;
            if (class_done(c, members)) continue;
            // members marks the first fragment after class_done's BFS.
            Vertex connector = -1;
            for (Vertex v = 0; v < g_.order() && connector == -1; ++v) {
                if (!members[v]) continue;
                for (Vertex w : g_.neighbors(v))
                    if (assign_[w] == kUndecided && allowed(w, c)) {
                        connector = w;
                        break;
                    }
            }
            if (connector == -1) return DecideStatus::No;
            assign_[connector] = c;
            DecideStatus st = search();
            if (st != DecideStatus::No) {
                if (st == DecideStatus::Budget) assign_[connector] = kUndecided;
                return st;
            }
            assign_[connector] = kUndecided;
            forbid_[connector] |= 1u << c;
            st = search();
            forbid_[connector] &= ~(1u << c);
            return st;
        }
        return DecideStatus::Yes; // every class is connected and dominating
    }

    const Graph& g_;
    const std::vector<Vertex>& terminals_;
    int t_;
    long long& budget_;
    std::vector<int> assign_;
    std::vector<uint32_t> forbid_;
    std::vector<char> mark_;
    std::vector<Vertex> bfs_;
};

// Does any single component of g minus S (minus nothing else) dominate every
// terminal? Poly-time "at least one pendant tree" test, any k.
bool one_tree_exists(const Graph& g, const std::vector<Vertex>& terminals,
                     std::vector<Vertex>* out_class = nullptr) {
    std::vector<char> is_term(g.order(), 0);
    for (Vertex s : terminals) is_term[s] = 1;
    std::vector<int> comp(g.order(), -1);
    int next = 0;
    for (Vertex v0 = 0; v0 < g.order(); ++v0) {
        if (is_term[v0] || comp[v0] != -1) continue;
        std::vector<Vertex> stack{v0}, members{v0};
        comp[v0] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!is_term[w] && comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                    members.push_back(w);
                }
        }
        bool dominates = true;
        for (Vertex s : terminals) {
            bool hit = false;
            for (Vertex w : g.neighbors(s))
                if (!is_term[w] && comp[w] == next) {
                    hit = true;
                    break;
                }
            if (!hit) {
                dominates = false;
                break;
            }
        }
        if (dominates) {
            if (out_class) {
                std::sort(members.begin(), members.end());
                *out_class = std::move(members);
            }
            return true;
        }
        ++next;
    }
    return false;
}

// tau_G(S) <= deg(s) - |N(s) cap S| for every terminal: trees use distinct
// terminal edges and never a terminal-terminal edge (k >= 3).
int terminal_degree_cap(const Graph& g, const TerminalSet& s) {
    int cap = g.order();
    for (Vertex v : s.vertices) {
        int free_deg = 0;
        for (Vertex w : g.neighbors(v))
            if (!s.contains(w)) ++free_deg;
        cap = std::min(cap, free_deg);
    }
    cap = std::min(cap, g.order() - s.k());
    return std::max(cap, 0);
}

bool same_component(const Graph& g, const std::vector<Vertex>& vs) {
    auto comp = g.components();
    for (Vertex v : vs)
        if (comp[v] != comp[vs.front()]) return false;
    return true;
}

} // namespace

DecideResult decide_packing(const Graph& g, const TerminalSet& s, int count,
                            long long& node_budget) {
    if (count <= 0) return {DecideStatus::Yes, {}};
    if (count == 1) {
        std::vector<Vertex> cls;
        if (one_tree_exists(g, s.vertices, &cls)) return {DecideStatus::Yes, {cls}};
        return {DecideStatus::No, {}};
    }
    ClassSearch search(g, s.vertices, count, node_budget);
    return search.run();
}

Packing packing_from_classes(const Graph& g, const TerminalSet& s,
                             const std::vector<std::vector<Vertex>>& classes) {
    Packing packing;
    for (const auto& cls : classes) {
        std::vector<char> in_class(g.order(), 0);
        for (Vertex v : cls) in_class[v] = 1;
        PendantTree t;
        t.terminals = s;
        // BFS spanning tree of the class from its least vertex.
        std::vector<char> seen(g.order(), 0);
        std::vector<Vertex> queue{cls.front()};
        seen[cls.front()] = 1;
        for (size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : g.neighbors(queue[i]))
                if (in_class[w] && !seen[w]) {
                    seen[w] = 1;
                    t.edges.emplace_back(queue[i], w);
                    queue.push_back(w);
                }
        for (Vertex term : s.vertices)
            for (Vertex w : g.neighbors(term))
                if (in_class[w]) {
                    t.edges.emplace_back(term, w);
                    break;
                }
        t.normalize();
        PendantTree pruned = prune_dangling(t);
        if (s.k() == 3) pruned = prune_to_core(pruned);
        packing.trees.push_back(std::move(pruned));
    }
    Verdict v = verify_packing(g, packing);
    if (!v.ok) throw std::logic_error("packing_from_classes produced an invalid packing: " + v.violation);
    packing.verified = true;
    return packing;
}

LocalResult local_pendant_connectivity(const Graph& g, const TerminalSet& s,
                                       const SearchLimits& limits) {
    for (Vertex v : s.vertices)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("terminal outside the host graph");
    LocalResult result;
    if (!same_component(g, s.vertices)) return result; // includes disconnected hosts
    long long budget = limits.max_nodes;

    if (s.k() == 2) {
        Vertex x = s.vertices[0], y = s.vertices[1];
        int value = local_connectivity(g, x, y);
        result.value = value;
        auto paths = disjoint_paths(g, x, y, value);
        for (const auto& path : paths) {
            PendantTree t;
            t.terminals = s;
            for (size_t i = 0; i + 1 < path.size(); ++i) t.edges.emplace_back(path[i], path[i + 1]);
            t.normalize();
            result.packing.trees.push_back(std::move(t));
        }
        Verdict v = verify_packing(g, result.packing);
        if (!v.ok) throw std::logic_error("path packing invalid: " + v.violation);
        result.packing.verified = true;
        return result;
    }

    const int cap = terminal_degree_cap(g, s);
    int value = 0;
    std::vector<std::vector<Vertex>> best_classes;
    while (value < cap) {
        DecideResult d = decide_packing(g, s, value + 1, budget);
        if (d.status == DecideStatus::Yes) {
            ++value;
            best_classes = std::move(d.classes);
        } else {
            if (d.status == DecideStatus::Budget) result.exact = false;
            break;
        }
    }
    result.value = value;
    result.nodes = limits.max_nodes - budget;
    if (value > 0) result.packing = packing_from_classes(g, s, best_classes);
    else result.packing.verified = true;
    return result;
}

namespace {

std::vector<std::vector<Vertex>> all_subsets(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

GlobalResult pendant_tree_connectivity(const Graph& g, int k, const SearchLimits& limits) {
    if (k < 2) throw std::invalid_argument("pendant_tree_connectivity needs k >= 2");
    GlobalResult result;
    if (!g.is_connected()) return result; // 0 by convention
    if (k > g.order()) {
        result.value = 1; // convention mirrored from kappa_k
        return result;
    }

    if (k == 2) {
        int best = -1;
        std::vector<Vertex> best_pair;
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = x + 1; y < g.order(); ++y) {
                int v = local_connectivity(g, x, y);
                if (best == -1 || v < best) {
                    best = v;
                    best_pair = {x, y};
                }
            }
        result.value = best;
        result.witness = TerminalSet(best_pair);
        return result;
    }

    const int delta = g.min_degree();
    const int kappa = vertex_connectivity(g);
    const int upper = std::max(0, std::min(delta - k + 1, kappa - k + 2));

    // All k-subsets, cheapest structural cap first: subsets packed around a
    // low-degree vertex reach their cap sooner and tend to be the minimizers.
    std::vector<std::vector<Vertex>> subsets = all_subsets(g.order(), k);
    std::vector<int> caps(subsets.size());
    std::vector<size_t> order(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
        caps[i] = terminal_degree_cap(g, TerminalSet(subsets[i]));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return caps[a] < caps[b]; });

    std::atomic<int> shared_min{upper};
    std::atomic<long long> nodes_used{0};
    std::atomic<size_t> cursor{0};
    std::atomic<bool> any_budget{false};

    // Each chain certifies tau_S >= its stop level; exact values below the
    // running minimum lower it. The running minimum only shortens later
    // chains, so the final minimum is timing-independent.
    auto worker = [&]() {
        while (true) {
            size_t oi = cursor.fetch_add(1);
            if (oi >= order.size()) break;
            size_t idx = order[oi];
            TerminalSet s(subsets[idx]);
            long long budget = limits.max_nodes;
            int t = 0;
            int eff = std::min(caps[idx], shared_min.load());
            bool exact_here = false;
            while (t < eff) {
                DecideResult d = decide_packing(g, s, t + 1, budget);
                if (d.status == DecideStatus::Yes) {
                    ++t;
                    eff = std::min(caps[idx], shared_min.load());
                } else if (d.status == DecideStatus::No) {
                    exact_here = true;
                    break;
                } else {
                    any_budget = true;
                    break;
                }
            }
            if (!exact_here && t == caps[idx]) exact_here = true; // cap pins it
            nodes_used += limits.max_nodes - budget;
            if (exact_here) {
                int cur = shared_min.load();
                while (t < cur && !shared_min.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };

    int jobs = std::max(1, limits.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const int final_min = shared_min.load();
    result.value = final_min;
    result.exact = !any_budget.load();

    if (result.exact) {
        // Deterministic witness hunt in enumeration order. Subsets whose
        // terminal-degree cap is final_min answer instantly; the others
        // resolve with one decide each.
        bool found = false;
        for (size_t i = 0; i < subsets.size(); ++i) {
            long long budget = limits.max_nodes;
            DecideResult d = decide_packing(g, TerminalSet(subsets[i]), final_min + 1, budget);
            nodes_used += limits.max_nodes - budget;
            if (d.status == DecideStatus::No) {
                result.witness = TerminalSet(subsets[i]);
                found = true;
                break;
            }
            if (d.status == DecideStatus::Budget) {
                result.exact = false;
                break;
            }
        }
        if (!found && result.exact)
            throw std::logic_error("no subset attains the computed minimum; solver bug");
    }
    result.nodes = nodes_used.load();
    return result;
}

} // namespace pst
