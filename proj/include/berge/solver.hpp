#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"

// Exact search for Berge cycles and paths. A vertex sequence hosts a Berge
// walk iff its consecutive pairs admit pairwise-distinct containing edges, a
// bipartite matching condition; the search runs depth-first over sequences
// and keeps that matching saturated incrementally, pruning the moment it
// cannot be.

namespace berge {

struct SearchBudget {
    std::optional<long long> node_limit;
    std::optional<double> time_limit_seconds;
};

struct SolveOutcome {
    enum class Verdict { found, exhausted, budget_exceeded };
    Verdict verdict = Verdict::exhausted;
    std::optional<BergeWalk> witness;
    long long nodes_explored = 0;
    std::string reason;
};

namespace detail {

struct SearchCore {
    const UniformHypergraph& h;
    int n, m;
    std::vector<std::vector<int>> pair_edges;  // indexed by pid(u,v)
    std::vector<std::vector<int>> adj;
    std::vector<int> vdeg;
    std::vector<uint64_t> prio;  // optional randomized candidate order
    bool use_prio = false;

    // Matching between walk slots (consecutive pairs, a stack) and edges.
    // Popping a slot just releases its edge: the remaining slots stay
    // saturated, and any saturating matching is as good as any other.
    std::vector<int> slot_pid;
    std::vector<int> slot_edge;
    std::vector<int> edge_slot;
    std::vector<int> mark;
    int epoch = 0;

    std::vector<int> seq;
    std::vector<char> used;
    int used_count = 0;

    long long nodes = 0;
    long long node_limit = -1;  // -1 = unlimited
    bool timed = false;
    std::chrono::steady_clock::time_point deadline;
    bool budget_hit = false;

    explicit SearchCore(const UniformHypergraph& host)
        : h(host), n(host.n), m((int)host.edges.size()) {
        pair_edges.assign((size_t)n * n, {});
        vdeg.assign(n, 0);
        adj.assign(n, {});
        for (int ei = 0; ei < m; ++ei) {
            const auto& e = h.edges[ei];
            for (size_t i = 0; i < e.size(); ++i) {
                ++vdeg[e[i]];
                for (size_t j = i + 1; j < e.size(); ++j)
                    pair_edges[pid(e[i], e[j])].push_back(ei);
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!pair_edges[pid(u, v)].empty()) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        edge_slot.assign(m, -1);
        mark.assign(m, 0);
        used.assign(n, 0);
    }

    void set_budget(const SearchBudget& b) {
        node_limit = b.node_limit ? *b.node_limit : -1;
        if (b.time_limit_seconds) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<
                           std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(
                               *b.time_limit_seconds));
        }
    }

    void set_seed_order(uint64_t seed) {
        std::mt19937_64 rng(seed);
        prio.assign(n, 0);
        for (auto& p : prio) p = rng();
        use_prio = true;
    }

    int pid(int a, int b) const {
        if (a > b) std::swap(a, b);
        return a * n + b;
    }
    int support(int a, int b) const {
        return (int)pair_edges[pid(a, b)].size();
    }

    bool tick() {
        ++nodes;
        if (node_limit >= 0 && nodes > node_limit) {
            budget_hit = true;
            return false;
        }
        if (timed && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            budget_hit = true;
            return false;
        }
        return true;
    }

    // Kuhn augmenting step. Mutates only on success, so a failed push
    // leaves the matching exactly as it was.
    bool augment(int slot, int p) {
        for (int e : pair_edges[p]) {
            if (mark[e] == epoch) continue;
            mark[e] = epoch;
            if (edge_slot[e] < 0 ||
                augment(edge_slot[e], slot_pid[edge_slot[e]])) {
                edge_slot[e] = slot;
                slot_edge[slot] = e;
                return true;
            }
        }
        return false;
    }

    bool push_pair(int a, int b) {
        slot_pid.push_back(pid(a, b));
        slot_edge.push_back(-1);
        ++epoch;
        if (augment((int)slot_pid.size() - 1, slot_pid.back())) return true;
        slot_pid.pop_back();
        slot_edge.pop_back();
        return false;
    }

    void pop_pair() {
        edge_slot[slot_edge.back()] = -1;
        slot_pid.pop_back();
        slot_edge.pop_back();
    }

    void take(int v) {
        used[v] = 1;
        ++used_count;
        seq.push_back(v);
    }
    void release(int v) {
        used[v] = 0;
        --used_count;
        seq.pop_back();
    }

    // Candidates to extend the sequence at its back, fewest containing
    // edges first (fail-first), ties by id. last_of_cycle adds the closure
    // constraints for the final cycle position.
    std::vector<int> candidates(int anchor, bool cycle_mode,
                                bool last_of_cycle) {
        int cur = seq.back();
        std::vector<std::pair<long long, int>> keyed;
        for (int u : adj[cur]) {
            if (used[u]) continue;
            if (cycle_mode) {
                if (u <= anchor || vdeg[u] < 2) continue;
                if (last_of_cycle) {
                    if (u <= seq[1]) continue;  // orientation canonicalizer
                    if (support(u, anchor) == 0) continue;
                }
            }
            long long key =
                use_prio ? (long long)(prio[u] >> 1) : support(cur, u);
            keyed.push_back({key, u});
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> out;
        out.reserve(keyed.size());
        for (auto& [key, u] : keyed) out.push_back(u);
        return out;
    }

    bool dfs_cycle(int k, int anchor) {
        int depth = (int)seq.size();
        bool last = depth == k - 1;
        for (int u : candidates(anchor, true, last)) {
            if (!tick()) return false;
            if (!push_pair(seq.back(), u)) continue;
            if (last) {
                if (push_pair(u, anchor)) {
                    seq.push_back(u);
                    return true;
                }
                pop_pair();
                continue;
            }
            take(u);
            if (dfs_cycle(k, anchor)) return true;
            release(u);
            pop_pair();
            if (budget_hit) return false;
        }
        return false;
    }

    SolveOutcome run_cycle(int k) {
        // Cycles are enumerated anchored at their minimum-id vertex, so all
        // other sequence vertices must exceed the anchor.
        for (int a = 0; a < n; ++a) {
            if (vdeg[a] < 2) continue;
            seq.clear();
            take(a);
            if (dfs_cycle(k, a)) {
                BergeWalk w;
                w.kind = BergeWalk::Kind::cycle;
                w.vertices = seq;
                w.edge_indices = slot_edge;
                return {SolveOutcome::Verdict::found, std::move(w), nodes,
                        ""};
            }
            release(a);
            if (budget_hit)
                return {SolveOutcome::Verdict::budget_exceeded, std::nullopt,
                        nodes, "search budget exceeded"};
        }
        return {SolveOutcome::Verdict::exhausted, std::nullopt, nodes, ""};
    }

    // Longest-path state.
    long long best_len = -1;
    std::vector<int> best_seq, best_edges;

    void note_path() {
        long long len = (long long)slot_pid.size();
        if (len > best_len) {
            best_len = len;
            best_seq = seq;
            best_edges = slot_edge;
        }
    }

    void dfs_path() {
        note_path();
        long long cur_edges = (long long)slot_pid.size();
        long long growth =
            std::min((long long)(n - used_count), (long long)m - cur_edges);
        if (cur_edges + growth <= best_len) return;
        for (int u : candidates(-1, false, false)) {
            if (!tick()) return;
            if (!push_pair(seq.back(), u)) continue;
            take(u);
            dfs_path();
            release(u);
            pop_pair();
            if (budget_hit) return;
        }
    }

    std::pair<long long, SolveOutcome> run_longest_path() {
        if (n == 0)
            return {0, {SolveOutcome::Verdict::exhausted, std::nullopt, 0,
                        "no vertices"}};
        for (int s = 0; s < n && !budget_hit; ++s) {
            seq.clear();
            take(s);
            dfs_path();
            release(s);
        }
        SolveOutcome out;
        out.nodes_explored = nodes;
        out.verdict = budget_hit ? SolveOutcome::Verdict::budget_exceeded
                                 : SolveOutcome::Verdict::found;
        if (budget_hit) out.reason = "search budget exceeded";
        BergeWalk w;
        w.kind = BergeWalk::Kind::path;
        w.vertices = best_seq;
        w.edge_indices = best_edges;
        out.witness = std::move(w);
        return {best_len, std::move(out)};
    }
};

}  // namespace detail

// Decides existence of a Berge cycle of length exactly k. Out-of-range k is
// an immediate (and correct) exhausted verdict: such a cycle would need k
// distinct vertices and k distinct edges.
inline SolveOutcome find_berge_cycle(
    const UniformHypergraph& h, int k, const SearchBudget& budget = {},
    std::optional<uint64_t> seed_order = std::nullopt) {
    if (k < 3 || k > h.n || k > (int)h.edges.size()) {
        SolveOutcome out;
        out.verdict = SolveOutcome::Verdict::exhausted;
        out.reason = "k=" + std::to_string(k) +
                     " outside feasible range [3, min(n, |E|)]";
        return out;
    }
    detail::SearchCore core(h);
    core.set_budget(budget);
    if (seed_order) core.set_seed_order(*seed_order);
    return core.run_cycle(k);
}

struct CircumferenceResult {
    long long length = 0;
    SolveOutcome outcome;
    // True when the budget ran out: the true circumference may exceed
    // `length`, which then only reflects cycles confirmed so far.
    bool length_is_lower_bound = false;
};

// Longest Berge cycle length, 0 when no cycle of length >= floor_k exists.
// Scans k downward from min(n, |E|), so the first hit is the maximum.
inline CircumferenceResult circumference(const UniformHypergraph& h,
                                         const SearchBudget& budget = {},
                                         int floor_k = 3) {
    CircumferenceResult res;
    long long hi = std::min((long long)h.n, (long long)h.edges.size());
    long long spent = 0;
    auto started = std::chrono::steady_clock::now();
    for (long long k = hi; k >= floor_k && k >= 3; --k) {
        SearchBudget sub;
        if (budget.node_limit) {
            long long left = *budget.node_limit - spent;
            if (left <= 0) {
                res.outcome.verdict = SolveOutcome::Verdict::budget_exceeded;
                res.outcome.reason = "search budget exceeded";
                res.outcome.nodes_explored = spent;
                res.length_is_lower_bound = true;
                return res;
            }
            sub.node_limit = left;
        }
        if (budget.time_limit_seconds) {
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
            sub.time_limit_seconds =
                std::max(0.0, *budget.time_limit_seconds - elapsed);
        }
        SolveOutcome out = find_berge_cycle(h, (int)k, sub);
        spent += out.nodes_explored;
        out.nodes_explored = spent;
        if (out.verdict == SolveOutcome::Verdict::found) {
            res.length = k;
            res.outcome = std::move(out);
            return res;
        }
        if (out.verdict == SolveOutcome::Verdict::budget_exceeded) {
            res.outcome = std::move(out);
            res.length_is_lower_bound = true;
            return res;
        }
        res.outcome = std::move(out);
    }
    res.outcome.nodes_explored = spent;
    return res;  // length 0, fully exhausted
}

// Maximum ell with a Berge path of ell edges (ell+1 vertices). A single
// vertex is a path of length 0, so any n >= 1 yields at least 0.
inline std::pair<long long, SolveOutcome> longest_berge_path(
    const UniformHypergraph& h, const SearchBudget& budget = {}) {
    detail::SearchCore core(h);
    core.set_budget(budget);
    return core.run_longest_path();
}

// Matching feasibility for an explicit pair list: yes iff the pairs can be
// assigned pairwise-distinct containing edges. This is the solver's pruning
// predicate exposed directly.
inline bool pair_matching_feasible(const std::vector<std::pair<int, int>>& pairs,
                                   const UniformHypergraph& h) {
    detail::SearchCore core(h);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= h.n || b < 0 || b >= h.n) return false;
        if (!core.push_pair(a, b)) return false;
    }
    return true;
}

// Fully independent oracle: subsets, cyclic orders, and edge assignments by
// plain exhaustive recursion, no matching theory involved. Kept deliberately
// naive; refuses n > 8.
inline long long brute_circumference(const UniformHypergraph& h) {
    if (h.n > 8)
        throw std::invalid_argument("brute_circumference allows n <= 8 only");
    int n = h.n, m = (int)h.edges.size();
    std::vector<char> edge_used(m, 0);
    std::vector<int> order;

    // Assign each consecutive pair of `order` (cyclically) a distinct edge.
    auto assign = [&](auto&& self, int pos) -> bool {
        int s = (int)order.size();
        if (pos == s) return true;
        int a = order[pos], b = order[(pos + 1) % s];
        for (int e = 0; e < m; ++e) {
            if (edge_used[e]) continue;
            if (!edge_contains(h.edges[e], a) ||
                !edge_contains(h.edges[e], b))
                continue;
            edge_used[e] = 1;
            if (self(self, pos + 1)) {
                edge_used[e] = 0;
                return true;
            }
            edge_used[e] = 0;
        }
        return false;
    };

    long long top = std::min((long long)n, (long long)m);
    for (long long s = top; s >= 3; --s) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (__builtin_popcount((unsigned)mask) != s) continue;
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) verts.push_back(v);
            std::vector<int> rest(verts.begin() + 1, verts.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue;  // mirror image
                order.clear();
                order.push_back(verts[0]);
                order.insert(order.end(), rest.begin(), rest.end());
                if (assign(assign, 0)) return s;
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    }
    return 0;
}

}  // namespace berge
