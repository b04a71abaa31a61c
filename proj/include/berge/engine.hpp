#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

// Local-search engine maintaining a vertex-disjoint, edge-disjoint
// (cycle, path) pair and applying length- or cover-improving moves until the
// cycle reaches a target length or no move applies.

namespace berge {

struct CyclePathPair {
    const UniformHypergraph* host = nullptr;
    BergeWalk cycle;  // kind cycle, always present
    BergeWalk path;   // kind path; empty vertex list only when the cycle
                      // already spans every vertex of the host
};

// Lexicographic: cycle length, then path length, then incidences between
// cycle edges and path vertices, then incidences between path edges and
// cycle vertices.
struct PairRank {
    long long c_len = 0;
    long long p_len = 0;
    long long cover_c = 0;
    long long cover_p = 0;
    auto operator<=>(const PairRank&) const = default;
};

inline PairRank pair_rank(const CyclePathPair& p) {
    PairRank r;
    r.c_len = (long long)p.cycle.edge_indices.size();
    r.p_len = (long long)p.path.edge_indices.size();
    const auto& edges = p.host->edges;
    std::vector<char> on_path(p.host->n, 0), on_cycle(p.host->n, 0);
    for (int v : p.path.vertices) on_path[v] = 1;
    for (int v : p.cycle.vertices) on_cycle[v] = 1;
    for (int e : p.cycle.edge_indices)
        for (int v : edges[e]) r.cover_c += on_path[v];
    for (int e : p.path.edge_indices)
        for (int v : edges[e]) r.cover_p += on_cycle[v];
    return r;
}

inline std::optional<std::string> validate_pair(const CyclePathPair& p) {
    if (!p.host) return "pair has no host hypergraph";
    const auto& h = *p.host;
    if (p.cycle.kind != BergeWalk::Kind::cycle) return "cycle walk has wrong kind";
    if (auto err = validate_walk(h, p.cycle)) return "cycle: " + *err;
    std::vector<char> on_cycle(h.n, 0);
    for (int v : p.cycle.vertices) on_cycle[v] = 1;
    if (p.path.vertices.empty()) {
        if (!p.path.edge_indices.empty())
            return "empty path carries edges";
        if ((int)p.cycle.vertices.size() != h.n)
            return "path may be empty only when the cycle spans every vertex";
        return std::nullopt;
    }
    if (p.path.kind != BergeWalk::Kind::path) return "path walk has wrong kind";
    if (auto err = validate_walk(h, p.path)) return "path: " + *err;
    for (int v : p.path.vertices)
        if (on_cycle[v]) return "vertex " + std::to_string(v) + " lies on both walks";
    std::vector<char> used(h.edges.size(), 0);
    for (int e : p.cycle.edge_indices) used[e] = 1;
    for (int e : p.path.edge_indices)
        if (used[e]) return "edge " + std::to_string(e) + " lies on both walks";
    return std::nullopt;
}

inline uint64_t pair_fingerprint(const CyclePathPair& p) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](long long x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (uint64_t)(x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(p.host ? p.host->n : -1);
    mix(p.host ? (long long)p.host->edges.size() : -1);
    for (int v : p.cycle.vertices) mix(v);
    mix(-2);
    for (int e : p.cycle.edge_indices) mix(e);
    mix(-3);
    for (int v : p.path.vertices) mix(v);
    mix(-4);
    for (int e : p.path.edge_indices) mix(e);
    return h;
}

struct Move {
    enum class Kind {
        extend_path,
        close_cycle,
        insert_endpoint,
        absorb_path,
        rotate_path,
        rotate_cycle_start,
        swap_cover_edge,
    };
    Kind kind{};
    bool at_back = false;  // which path endpoint the move works from
    bool on_path = false;  // swap_cover_edge: replace a path edge instead
    int vertex = -1;       // new vertex joining a walk / replacement endpoint
    int edge_a = -1;       // host edge ids
    int edge_b = -1;
    int cycle_pos = -1;    // position into cycle edge list
    int path_pos = -1;     // position into path vertex or edge list, per kind
    std::vector<Move> prelude;  // rank-preserving setup steps, applied first
    uint64_t fingerprint = 0;   // fingerprint of the pair it was built for
};

inline const char* move_kind_name(Move::Kind k) {
    switch (k) {
        case Move::Kind::extend_path: return "extend_path";
        case Move::Kind::close_cycle: return "close_cycle";
        case Move::Kind::insert_endpoint: return "insert_endpoint";
        case Move::Kind::absorb_path: return "absorb_path";
        case Move::Kind::rotate_path: return "rotate_path";
        case Move::Kind::rotate_cycle_start: return "rotate_cycle_start";
        case Move::Kind::swap_cover_edge: return "swap_cover_edge";
    }
    return "?";
}

namespace detail {

struct PairView {
    std::vector<char> edge_used, on_cycle, on_path;
    explicit PairView(const CyclePathPair& p)
        : edge_used(p.host->edges.size(), 0),
          on_cycle(p.host->n, 0),
          on_path(p.host->n, 0) {
        for (int e : p.cycle.edge_indices) edge_used[e] = 1;
        for (int e : p.path.edge_indices) edge_used[e] = 1;
        for (int v : p.cycle.vertices) on_cycle[v] = 1;
        for (int v : p.path.vertices) on_path[v] = 1;
    }
    bool free_vertex(int v) const { return !on_cycle[v] && !on_path[v]; }
};

[[noreturn]] inline void bad_move(const std::string& what) {
    throw std::invalid_argument("move does not apply: " + what);
}

// Off-cycle vertex covered by the most cycle edges, lowest id on ties.
// Empty walk when the cycle spans everything.
inline BergeWalk reseed_path(const UniformHypergraph& h,
                             const BergeWalk& cycle) {
    std::vector<char> on_cycle(h.n, 0);
    for (int v : cycle.vertices) on_cycle[v] = 1;
    std::vector<long long> score(h.n, 0);
    for (int e : cycle.edge_indices)
        for (int v : h.edges[e])
            if (!on_cycle[v]) ++score[v];
    int best = -1;
    for (int v = 0; v < h.n; ++v) {
        if (on_cycle[v]) continue;
        if (best < 0 || score[v] > score[best]) best = v;
    }
    BergeWalk path{BergeWalk::Kind::path, {}, {}};
    if (best >= 0) path.vertices.push_back(best);
    return path;
}

inline CyclePathPair apply_one(const CyclePathPair& p, const Move& mv) {
    const auto& h = *p.host;
    PairView view(p);
    CyclePathPair out = p;
    auto& cyc_v = out.cycle.vertices;
    auto& cyc_e = out.cycle.edge_indices;
    auto& pat_v = out.path.vertices;
    auto& pat_e = out.path.edge_indices;
    int s = (int)cyc_v.size();
    int lv = (int)pat_v.size();
    auto need_unused = [&](int e, const char* role) {
        if (e < 0 || e >= (int)h.edges.size()) bad_move(std::string(role) + " edge out of range");
        if (view.edge_used[e]) bad_move(std::string(role) + " edge already on a walk");
    };
    switch (mv.kind) {
        case Move::Kind::extend_path: {
            if (lv == 0) bad_move("extend with empty path");
            int u = mv.at_back ? pat_v.back() : pat_v.front();
            need_unused(mv.edge_a, "extension");
            if (!edge_contains(h, mv.edge_a, u) ||
                !edge_contains(h, mv.edge_a, mv.vertex))
                bad_move("extension edge misses an endpoint");
            if (mv.vertex < 0 || mv.vertex >= h.n || !view.free_vertex(mv.vertex))
                bad_move("extension vertex not free");
            if (mv.at_back) {
                pat_v.push_back(mv.vertex);
                pat_e.push_back(mv.edge_a);
            } else {
                pat_v.insert(pat_v.begin(), mv.vertex);
                pat_e.insert(pat_e.begin(), mv.edge_a);
            }
            break;
        }
        case Move::Kind::close_cycle: {
            int j = mv.path_pos;
            need_unused(mv.edge_a, "closure");
            std::vector<int> nv, ne, rv, re;
            if (!mv.at_back) {
                if (j < 2 || j >= lv) bad_move("closure index out of range");
                if (!edge_contains(h, mv.edge_a, pat_v[0]) ||
                    !edge_contains(h, mv.edge_a, pat_v[j]))
                    bad_move("closure edge misses an endpoint");
                nv.assign(pat_v.begin(), pat_v.begin() + j + 1);
                ne.assign(pat_e.begin(), pat_e.begin() + j);
                ne.push_back(mv.edge_a);
                rv.assign(pat_v.begin() + j + 1, pat_v.end());
                if ((int)pat_e.size() > j + 1)
                    re.assign(pat_e.begin() + j + 1, pat_e.end());
            } else {
                if (j < 0 || j > lv - 3) bad_move("closure index out of range");
                if (!edge_contains(h, mv.edge_a, pat_v.back()) ||
                    !edge_contains(h, mv.edge_a, pat_v[j]))
                    bad_move("closure edge misses an endpoint");
                nv.assign(pat_v.begin() + j, pat_v.end());
                ne.assign(pat_e.begin() + j, pat_e.end());
                ne.push_back(mv.edge_a);
                rv.assign(pat_v.begin(), pat_v.begin() + j);
                if (j >= 2) re.assign(pat_e.begin(), pat_e.begin() + j - 1);
            }
            if ((int)nv.size() <= s) bad_move("closure does not beat the current cycle");
            out.cycle.vertices = nv;
            out.cycle.edge_indices = ne;
            if (rv.empty()) {
                out.path = reseed_path(h, out.cycle);
            } else {
                out.path.vertices = rv;
                out.path.edge_indices = re;
            }
            break;
        }
        case Move::Kind::insert_endpoint: {
            if (lv == 0) bad_move("insert with empty path");
            int u = mv.at_back ? pat_v.back() : pat_v.front();
            int i = mv.cycle_pos;
            if (i < 0 || i >= s) bad_move("cycle position out of range");
            need_unused(mv.edge_a, "first bridging");
            need_unused(mv.edge_b, "second bridging");
            if (mv.edge_a == mv.edge_b) bad_move("bridging edges coincide");
            int vi = cyc_v[i], vn = cyc_v[(i + 1) % s];
            if (!edge_contains(h, mv.edge_a, vi) || !edge_contains(h, mv.edge_a, u) ||
                !edge_contains(h, mv.edge_b, u) || !edge_contains(h, mv.edge_b, vn))
                bad_move("bridging edge misses an endpoint");
            cyc_v.insert(cyc_v.begin() + i + 1, u);
            cyc_e[i] = mv.edge_a;
            cyc_e.insert(cyc_e.begin() + i + 1, mv.edge_b);
            if (lv == 1) {
                out.path = reseed_path(h, out.cycle);
            } else if (mv.at_back) {
                pat_v.pop_back();
                pat_e.pop_back();
            } else {
                pat_v.erase(pat_v.begin());
                pat_e.erase(pat_e.begin());
            }
            break;
        }
        case Move::Kind::absorb_path: {
            if (lv == 0) bad_move("absorb with empty path");
            int i = mv.cycle_pos;
            if (i < 0 || i >= s) bad_move("cycle position out of range");
            need_unused(mv.edge_a, "entry");
            need_unused(mv.edge_b, "exit");
            if (mv.edge_a == mv.edge_b) bad_move("splice edges coincide");
            int vi = cyc_v[i], vn = cyc_v[(i + 1) % s];
            std::vector<int> seq_v = pat_v, seq_e = pat_e;
            if (mv.at_back) {
                std::reverse(seq_v.begin(), seq_v.end());
                std::reverse(seq_e.begin(), seq_e.end());
            }
            if (!edge_contains(h, mv.edge_a, vi) ||
                !edge_contains(h, mv.edge_a, seq_v.front()) ||
                !edge_contains(h, mv.edge_b, seq_v.back()) ||
                !edge_contains(h, mv.edge_b, vn))
                bad_move("splice edge misses an endpoint");
            cyc_v.insert(cyc_v.begin() + i + 1, seq_v.begin(), seq_v.end());
            std::vector<int> splice;
            splice.push_back(mv.edge_a);
            splice.insert(splice.end(), seq_e.begin(), seq_e.end());
            splice.push_back(mv.edge_b);
            cyc_e.erase(cyc_e.begin() + i);
            cyc_e.insert(cyc_e.begin() + i, splice.begin(), splice.end());
            out.path = reseed_path(h, out.cycle);
            break;
        }
        case Move::Kind::rotate_path: {
            int x = mv.path_pos;
            if (!mv.at_back) {
                if (x < 1 || x >= (int)pat_e.size()) bad_move("pivot out of range");
                if (!edge_contains(h, pat_e[x], pat_v[0]))
                    bad_move("pivot edge misses the front vertex");
                std::reverse(pat_v.begin(), pat_v.begin() + x + 1);
                std::reverse(pat_e.begin(), pat_e.begin() + x);
            } else {
                if (x < 0 || x > (int)pat_e.size() - 2) bad_move("pivot out of range");
                if (!edge_contains(h, pat_e[x], pat_v.back()))
                    bad_move("pivot edge misses the back vertex");
                std::reverse(pat_v.begin() + x + 1, pat_v.end());
                std::reverse(pat_e.begin() + x + 1, pat_e.end());
            }
            break;
        }
        case Move::Kind::rotate_cycle_start: {
            if (lv < 2) bad_move("endpoint replacement needs a path edge");
            if (mv.vertex < 0 || mv.vertex >= h.n || !view.free_vertex(mv.vertex))
                bad_move("replacement vertex not free");
            int pivot = mv.at_back ? pat_e.back() : pat_e.front();
            if (!edge_contains(h, pivot, mv.vertex))
                bad_move("boundary edge misses the replacement vertex");
            if (mv.at_back)
                pat_v.back() = mv.vertex;
            else
                pat_v.front() = mv.vertex;
            break;
        }
        case Move::Kind::swap_cover_edge: {
            need_unused(mv.edge_a, "replacement");
            if (!mv.on_path) {
                int i = mv.cycle_pos;
                if (i < 0 || i >= s) bad_move("cycle position out of range");
                if (!edge_contains(h, mv.edge_a, cyc_v[i]) ||
                    !edge_contains(h, mv.edge_a, cyc_v[(i + 1) % s]))
                    bad_move("replacement edge misses the pair");
                cyc_e[i] = mv.edge_a;
            } else {
                int x = mv.path_pos;
                if (x < 0 || x >= (int)pat_e.size()) bad_move("path position out of range");
                if (!edge_contains(h, mv.edge_a, pat_v[x]) ||
                    !edge_contains(h, mv.edge_a, pat_v[x + 1]))
                    bad_move("replacement edge misses the pair");
                pat_e[x] = mv.edge_a;
            }
            break;
        }
    }
    if (auto err = validate_pair(out))
        throw std::logic_error("move produced an invalid pair: " + *err);
    return out;
}

inline CyclePathPair apply_sequence(const CyclePathPair& p, const Move& mv) {
    CyclePathPair cur = p;
    for (const auto& pre : mv.prelude) cur = apply_one(cur, pre);
    return apply_one(cur, mv);
}

struct ScoredMove {
    Move move;
    PairRank after;
    int touched = INT_MAX;  // lowest vertex id named by the payload
};

inline int payload_touch(const CyclePathPair& p, const Move& mv) {
    int t = INT_MAX;
    auto upd = [&](int v) { if (v >= 0) t = std::min(t, v); };
    upd(mv.vertex);
    const auto& cv = p.cycle.vertices;
    const auto& pv = p.path.vertices;
    if (mv.cycle_pos >= 0 && mv.cycle_pos < (int)cv.size()) {
        upd(cv[mv.cycle_pos]);
        upd(cv[(mv.cycle_pos + 1) % cv.size()]);
    }
    if (mv.path_pos >= 0 && mv.path_pos < (int)pv.size()) upd(pv[mv.path_pos]);
    if (!pv.empty()) upd(mv.at_back ? pv.back() : pv.front());
    return t;
}

// Enumerates candidate payloads per kind, then keeps exactly those whose
// net application strictly raises the rank.
inline void enumerate_simple(const CyclePathPair& p, const PairRank& base,
                             uint64_t fp, std::vector<ScoredMove>& out) {
    const auto& h = *p.host;
    PairView view(p);
    const auto& cv = p.cycle.vertices;
    const auto& ce = p.cycle.edge_indices;
    const auto& pv = p.path.vertices;
    const auto& pe = p.path.edge_indices;
    int s = (int)cv.size();
    int lv = (int)pv.size();
    int m = (int)h.edges.size();
    auto consider = [&](Move mv) {
        mv.fingerprint = fp;
        CyclePathPair next;
        try {
            next = apply_one(p, mv);
        } catch (const std::invalid_argument&) {
            return;
        }
        PairRank after = pair_rank(next);
        if (after > base) {
            int touched = payload_touch(p, mv);
            out.push_back({std::move(mv), after, touched});
        }
    };
    for (int side = 0; side < 2 && lv > 0; ++side) {
        bool back = side == 1;
        if (back && lv == 1) break;  // same endpoint
        int u = back ? pv.back() : pv.front();
        for (int g = 0; g < m; ++g) {
            if (view.edge_used[g] || !edge_contains(h, g, u)) continue;
            for (int w : h.edges[g]) {
                if (view.free_vertex(w)) {
                    Move mv;
                    mv.kind = Move::Kind::extend_path;
                    mv.at_back = back;
                    mv.vertex = w;
                    mv.edge_a = g;
                    consider(mv);
                }
                if (view.on_path[w]) {
                    for (int j = 0; j < lv; ++j) {
                        if (pv[j] != w) continue;
                        Move mv;
                        mv.kind = Move::Kind::close_cycle;
                        mv.at_back = back;
                        mv.edge_a = g;
                        mv.path_pos = j;
                        consider(mv);
                    }
                }
            }
        }
    }
    // Distinct unused edges through two required pairs: smallest ids, with a
    // swap retry when the greedy first pick blocks the second pair.
    auto find_link = [&](int a, int b, int skip) {
        for (int g = 0; g < m; ++g) {
            if (view.edge_used[g] || g == skip) continue;
            if (edge_contains(h, g, a) && edge_contains(h, g, b)) return g;
        }
        return -1;
    };
    auto find_pair = [&](int a1, int a2, int b1, int b2, int& ea, int& eb) {
        ea = find_link(a1, a2, -1);
        if (ea < 0) return false;
        eb = find_link(b1, b2, ea);
        if (eb >= 0) return true;
        eb = find_link(b1, b2, -1);
        if (eb < 0) return false;
        ea = find_link(a1, a2, eb);
        return ea >= 0;
    };
    for (int side = 0; side < 2 && lv > 0; ++side) {
        bool back = side == 1;
        if (back && lv == 1) break;
        int u = back ? pv.back() : pv.front();
        for (int i = 0; i < s; ++i) {
            int a, b;
            if (!find_pair(cv[i], u, u, cv[(i + 1) % s], a, b)) continue;
            Move mv;
            mv.kind = Move::Kind::insert_endpoint;
            mv.at_back = back;
            mv.cycle_pos = i;
            mv.edge_a = a;
            mv.edge_b = b;
            consider(mv);
        }
    }
    for (int side = 0; side < 2 && lv >= 2; ++side) {
        bool back = side == 1;
        int entry = back ? pv.back() : pv.front();
        int exit = back ? pv.front() : pv.back();
        for (int i = 0; i < s; ++i) {
            int a, b;
            if (!find_pair(cv[i], entry, exit, cv[(i + 1) % s], a, b)) continue;
            Move mv;
            mv.kind = Move::Kind::absorb_path;
            mv.at_back = back;
            mv.cycle_pos = i;
            mv.edge_a = a;
            mv.edge_b = b;
            consider(mv);
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int g = 0; g < m; ++g) {
            if (view.edge_used[g] || g == ce[i]) continue;
            if (!edge_contains(h, g, cv[i]) ||
                !edge_contains(h, g, cv[(i + 1) % s]))
                continue;
            Move mv;
            mv.kind = Move::Kind::swap_cover_edge;
            mv.cycle_pos = i;
            mv.edge_a = g;
            consider(mv);
        }
    }
    for (int x = 0; x + 1 < lv; ++x) {
        for (int g = 0; g < m; ++g) {
            if (view.edge_used[g] || g == pe[x]) continue;
            if (!edge_contains(h, g, pv[x]) || !edge_contains(h, g, pv[x + 1]))
                continue;
            Move mv;
            mv.kind = Move::Kind::swap_cover_edge;
            mv.on_path = true;
            mv.path_pos = x;
            mv.edge_a = g;
            consider(mv);
        }
    }
    for (int side = 0; side < 2 && lv >= 2; ++side) {
        bool back = side == 1;
        int pivot = back ? pe.back() : pe.front();
        for (int w : h.edges[pivot]) {
            if (!view.free_vertex(w)) continue;
            Move mv;
            mv.kind = Move::Kind::rotate_cycle_start;
            mv.at_back = back;
            mv.vertex = w;
            consider(mv);
        }
    }
}

inline void enumerate_preludes(const CyclePathPair& p,
                               std::vector<Move>& out) {
    const auto& h = *p.host;
    PairView view(p);
    const auto& pv = p.path.vertices;
    const auto& pe = p.path.edge_indices;
    int ne = (int)pe.size();
    for (int x = 1; x < ne; ++x)
        if (edge_contains(h, pe[x], pv[0])) {
            Move mv;
            mv.kind = Move::Kind::rotate_path;
            mv.path_pos = x;
            out.push_back(mv);
        }
    for (int x = 0; x <= ne - 2; ++x)
        if (edge_contains(h, pe[x], pv.back())) {
            Move mv;
            mv.kind = Move::Kind::rotate_path;
            mv.at_back = true;
            mv.path_pos = x;
            out.push_back(mv);
        }
    if (ne >= 1) {
        for (int side = 0; side < 2; ++side) {
            bool back = side == 1;
            int pivot = back ? pe.back() : pe.front();
            for (int w : h.edges[pivot]) {
                if (!view.free_vertex(w)) continue;
                Move mv;
                mv.kind = Move::Kind::rotate_cycle_start;
                mv.at_back = back;
                mv.vertex = w;
                out.push_back(mv);
            }
        }
    }
}

inline std::vector<ScoredMove> enumerate_improving(const CyclePathPair& p) {
    PairRank base = pair_rank(p);
    uint64_t fp = pair_fingerprint(p);
    std::vector<ScoredMove> out;
    enumerate_simple(p, base, fp, out);
    if (!out.empty()) return out;
    // Compound fallback: one rank-preserving (or cover-shuffling) setup step,
    // then a simple move, kept when the net effect beats the original rank.
    std::vector<Move> pres;
    enumerate_preludes(p, pres);
    for (const auto& pre : pres) {
        CyclePathPair mid;
        try {
            mid = apply_one(p, pre);
        } catch (const std::invalid_argument&) {
            continue;
        }
        std::vector<ScoredMove> inner;
        enumerate_simple(mid, base, fp, inner);
        for (auto& sm : inner) {
            sm.move.prelude.push_back(pre);
            std::rotate(sm.move.prelude.rbegin(), sm.move.prelude.rbegin() + 1,
                        sm.move.prelude.rend());
            out.push_back(std::move(sm));
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<Move> applicable_moves(const CyclePathPair& p) {
    if (auto err = validate_pair(p))
        throw std::invalid_argument("invalid pair: " + *err);
    std::vector<Move> out;
    for (auto& sm : detail::enumerate_improving(p)) out.push_back(sm.move);
    return out;
}

// Applies a move produced by applicable_moves for exactly this pair state.
// A move built against any other state is rejected.
inline CyclePathPair apply_move(const CyclePathPair& p, const Move& mv) {
    if (auto err = validate_pair(p))
        throw std::invalid_argument("invalid pair: " + *err);
    if (mv.fingerprint != pair_fingerprint(p))
        throw std::invalid_argument("stale move: pair state changed since enumeration");
    CyclePathPair next = detail::apply_sequence(p, mv);
    if (!(pair_rank(next) > pair_rank(p)))
        throw std::logic_error("move failed to improve the pair rank");
    return next;
}

struct RunTraceEntry {
    Move move;
    PairRank before, after;
};

struct RunResult {
    enum class Status { found, stuck };
    Status status = Status::stuck;
    std::optional<BergeWalk> witness;   // cycle of length >= target
    std::optional<CyclePathPair> pair;  // terminal pair when one was built
    long long steps = 0;
    bool max_steps_exceeded = false;
    bool no_initial_cycle = false;
    std::vector<RunTraceEntry> trace;
};

namespace detail {

// Greedy fail-first path growth: cheapest new vertex by degree, lowest edge
// id as tie-break, trying the back end before the front.
inline bool grow_path(const UniformHypergraph& h, std::vector<int>& pv,
                      std::vector<int>& pe, std::vector<char>& used_edge,
                      std::vector<char>& used_vert,
                      const std::vector<long long>& deg) {
    for (int side = 0; side < 2; ++side) {
        int u = side == 0 ? pv.back() : pv.front();
        int best_w = -1, best_g = -1;
        for (int g = 0; g < (int)h.edges.size(); ++g) {
            if (used_edge[g] || !edge_contains(h, g, u)) continue;
            for (int w : h.edges[g]) {
                if (used_vert[w]) continue;
                if (best_w < 0 || deg[w] < deg[best_w] ||
                    (deg[w] == deg[best_w] && w < best_w))
                    best_w = w, best_g = g;
            }
        }
        if (best_w < 0) continue;
        if (side == 0) {
            pv.push_back(best_w);
            pe.push_back(best_g);
        } else {
            pv.insert(pv.begin(), best_w);
            pe.insert(pe.begin(), best_g);
        }
        used_edge[best_g] = 1;
        used_vert[best_w] = 1;
        return true;
    }
    return false;
}

}  // namespace detail

// Grows a path greedily, closes the longest cycle it can, then repeatedly
// applies the best strictly improving move until the cycle reaches
// target_k or nothing applies. Deterministic throughout.
inline RunResult engine_run(const UniformHypergraph& h, int target_k,
                            long long max_steps = -1,
                            bool collect_trace = false) {
    if (target_k < 3 || target_k > h.n || target_k > (int)h.edges.size())
        throw std::invalid_argument("target length outside [3, min(n, |E|)]");
    RunResult res;
    auto prof = degree_profile(h);
    int start = -1;
    for (int v = 0; v < h.n; ++v)
        if (prof.degree[v] > 0 &&
            (start < 0 || prof.degree[v] < prof.degree[start]))
            start = v;
    if (start < 0) {
        res.no_initial_cycle = true;
        return res;
    }
    std::vector<int> pv{start}, pe;
    std::vector<char> used_edge(h.edges.size(), 0), used_vert(h.n, 0);
    used_vert[start] = 1;
    while (detail::grow_path(h, pv, pe, used_edge, used_vert, prof.degree)) {
    }
    // Longest closure over both endpoints; earlier split index means a
    // longer cycle for the front endpoint, later for the back.
    int best_len = 0, best_j = -1, best_g = -1;
    bool best_back = false;
    int lv = (int)pv.size();
    for (int g = 0; g < (int)h.edges.size(); ++g) {
        if (used_edge[g]) continue;
        bool has_front = edge_contains(h, g, pv.front());
        bool has_back = edge_contains(h, g, pv.back());
        for (int j = 0; j < lv; ++j) {
            if (!edge_contains(h, g, pv[j])) continue;
            if (has_front && j >= 2) {
                int len = j + 1;
                if (len > best_len ||
                    (len == best_len && best_back)) {  // prefer front closures
                    best_len = len;
                    best_j = j;
                    best_g = g;
                    best_back = false;
                }
            }
            if (has_back && j <= lv - 3 && lv - j > best_len) {
                best_len = lv - j;
                best_j = j;
                best_g = g;
                best_back = true;
            }
        }
    }
    if (best_len < 3) {
        res.no_initial_cycle = true;
        return res;
    }
    CyclePathPair pair;
    pair.host = &h;
    pair.cycle.kind = BergeWalk::Kind::cycle;
    if (!best_back) {
        pair.cycle.vertices.assign(pv.begin(), pv.begin() + best_j + 1);
        pair.cycle.edge_indices.assign(pe.begin(), pe.begin() + best_j);
        pair.cycle.edge_indices.push_back(best_g);
        pair.path.kind = BergeWalk::Kind::path;
        pair.path.vertices.assign(pv.begin() + best_j + 1, pv.end());
        if ((int)pe.size() > best_j + 1)
            pair.path.edge_indices.assign(pe.begin() + best_j + 1, pe.end());
    } else {
        pair.cycle.vertices.assign(pv.begin() + best_j, pv.end());
        pair.cycle.edge_indices.assign(pe.begin() + best_j, pe.end());
        pair.cycle.edge_indices.push_back(best_g);
        pair.path.kind = BergeWalk::Kind::path;
        pair.path.vertices.assign(pv.begin(), pv.begin() + best_j);
        if (best_j >= 2)
            pair.path.edge_indices.assign(pe.begin(), pe.begin() + best_j - 1);
    }
    if (pair.path.vertices.empty())
        pair.path = detail::reseed_path(h, pair.cycle);
    if (auto err = validate_pair(pair))
        throw std::logic_error("initial pair invalid: " + *err);
    long long cover_span = (long long)h.n * h.r + 1;
    long long hard_cap =
        (long long)(h.n + 1) * (h.n + 1) * cover_span * cover_span;
    while (true) {
        if ((int)pair.cycle.vertices.size() >= target_k) {
            res.status = RunResult::Status::found;
            res.witness = pair.cycle;
            res.pair = pair;
            return res;
        }
        if (max_steps >= 0 && res.steps >= max_steps) {
            res.max_steps_exceeded = true;
            break;
        }
        if (res.steps > hard_cap)
            throw std::logic_error("improvement loop exceeded its rank bound");
        auto moves = detail::enumerate_improving(pair);
        if (moves.empty()) break;
        const detail::ScoredMove* best = &moves[0];
        for (const auto& sm : moves)
            if (sm.after > best->after ||
                (sm.after == best->after && sm.touched < best->touched))
                best = &sm;
        PairRank before = pair_rank(pair);
        pair = detail::apply_sequence(pair, best->move);
        ++res.steps;
        if (collect_trace)
            res.trace.push_back({best->move, before, pair_rank(pair)});
    }
    res.status = RunResult::Status::stuck;
    res.pair = pair;
    return res;
}

}  // namespace berge
