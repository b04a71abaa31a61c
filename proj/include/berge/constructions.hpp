#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/thresholds.hpp"

// Deterministic generators for the sharpness families H1..H5, the tight
// cycle, and a seeded random ensemble with a minimum-degree floor.

namespace berge {

namespace detail {

// Appends every r-subset of verts (must be sorted) to out, in lex order.
inline void append_complete(const std::vector<int>& verts, int r,
                            std::vector<std::vector<int>>& out) {
    int m = (int)verts.size();
    if (r > m) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        std::vector<int> e(r);
        for (int i = 0; i < r; ++i) e[i] = verts[idx[i]];
        out.push_back(std::move(e));
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<int> iota_range(int lo, int hi) {  // [lo, hi)
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

inline void require_r_le_t(int n, int r, const char* family) {
    if (r < 3 || r >= n)
        throw std::invalid_argument(std::string(family) + ": need 3 <= r < n");
    if (r > t_of(n))
        throw std::invalid_argument(std::string(family) +
                                    ": needs r <= floor((n-1)/2)");
}

// Uniform integer in [0, m) without std::uniform_int_distribution, so the
// byte stream is pinned to the generator alone.
inline uint64_t rand_below(std::mt19937_64& rng, uint64_t m) {
    uint64_t zone = UINT64_MAX - UINT64_MAX % m;
    uint64_t x;
    do {
        x = rng();
    } while (x >= zone);
    return x % m;
}

inline bool chance(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return (double)(rng() >> 11) < p * 9007199254740992.0;  // p * 2^53
}

}  // namespace detail

// Two complete r-graphs sharing exactly one vertex (n odd) or disjoint plus
// a single bridge edge (n even). Minimum degree C(t, r-1), circumference
// ceil(n/2), no hamiltonian Berge cycle.
inline UniformHypergraph gen_h1(int n, int r) {
    detail::require_r_le_t(n, r, "h1");
    std::vector<std::vector<int>> edges;
    if (n % 2 == 1) {
        int t = (n - 1) / 2;
        std::vector<int> a = detail::iota_range(0, t + 1);  // {0..t}
        std::vector<int> b;                                  // {0, t+1..n-1}
        b.push_back(0);
        for (int v = t + 1; v < n; ++v) b.push_back(v);
        detail::append_complete(a, r, edges);
        detail::append_complete(b, r, edges);
    } else {
        int half = n / 2;
        detail::append_complete(detail::iota_range(0, half), r, edges);
        detail::append_complete(detail::iota_range(half, n), r, edges);
        // Bridge: smallest vertex of the first clique with the r-1 smallest
        // of the second.
        std::vector<int> bridge;
        bridge.push_back(0);
        for (int v = half; v < half + r - 1; ++v) bridge.push_back(v);
        edges.push_back(std::move(bridge));
    }
    return UniformHypergraph{n, r, std::move(edges)};
}

// Split V into X = {0..t-1} and Y = {t..n-1}; take every r-set with at most
// one vertex in Y. Minimum degree C(t, r-1), attained on Y; no hamiltonian
// Berge cycle because no edge contains two Y vertices.
inline UniformHypergraph gen_h2(int n, int r) {
    detail::require_r_le_t(n, r, "h2");
    int t = (int)t_of(n);
    std::vector<std::vector<int>> edges;
    std::vector<int> x = detail::iota_range(0, t);
    detail::append_complete(x, r, edges);
    std::vector<std::vector<int>> stubs;
    detail::append_complete(x, r - 1, stubs);
    for (int y = t; y < n; ++y)
        for (const auto& s : stubs) {
            std::vector<int> e = s;
            e.push_back(y);  // y > every X vertex, stays sorted
            edges.push_back(std::move(e));
        }
    return UniformHypergraph{n, r, std::move(edges)};
}

// Tight cycle with the window starting at 0 removed: n-1 edges, degree
// floor r-1, no hamiltonian Berge cycle for lack of an n-th edge.
inline UniformHypergraph gen_h3(int n, int r) {
    if (r < 3 || r >= n) throw std::invalid_argument("h3: need 3 <= r < n");
    if (2 * r < n)
        throw std::invalid_argument("h3: needs r >= n/2");
    std::vector<std::vector<int>> edges;
    for (int i = 1; i < n; ++i) {
        std::vector<int> e;
        for (int j = 0; j < r; ++j) e.push_back((i + j) % n);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return UniformHypergraph{n, r, std::move(edges)};
}

// (n-1)/(k-2) complete r-graphs on k-1 vertices, all sharing vertex 0.
// Minimum degree C(k-2, r-1), circumference k-1.
inline UniformHypergraph gen_h4(int n, int r, int k) {
    if (r < 3 || r >= n) throw std::invalid_argument("h4: need 3 <= r < n");
    if (k < r + 2 || k >= (int)t_of(n) + 2)
        throw std::invalid_argument("h4: needs r+2 <= k < t+2");
    if ((n - 1) % (k - 2) != 0)
        throw std::invalid_argument("h4: needs (k-2) | (n-1)");
    int cliques = (n - 1) / (k - 2);
    std::vector<std::vector<int>> edges;
    for (int j = 0; j < cliques; ++j) {
        std::vector<int> verts;
        verts.push_back(0);
        for (int v = 1 + j * (k - 2); v <= (j + 1) * (k - 2); ++v)
            verts.push_back(v);
        detail::append_complete(verts, r, edges);
    }
    return UniformHypergraph{n, r, std::move(edges)};
}

// (n-1)/r vertex sets S_i of size r+1 sharing vertex 0, with k-1 chosen
// edges inside each. The choice is fixed: omit the largest, second-largest,
// ... non-shared vertex, so vertex 0 lies in every chosen edge and the
// non-shared vertices realize degree k-2 exactly.
inline UniformHypergraph gen_h5(int n, int r, int k) {
    if (r < 3 || r >= n) throw std::invalid_argument("h5: need 3 <= r < n");
    if (k < 3 || k > r + 1 || r > (int)t_of(n))
        throw std::invalid_argument("h5: needs 3 <= k <= r+1 and r <= t");
    if ((n - 1) % r != 0) throw std::invalid_argument("h5: needs r | (n-1)");
    int groups = (n - 1) / r;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < groups; ++i) {
        std::vector<int> s;
        s.push_back(0);
        for (int v = 1 + i * r; v <= (i + 1) * r; ++v) s.push_back(v);
        for (int d = 0; d < k - 1; ++d) {
            std::vector<int> e;
            int omit = s[(int)s.size() - 1 - d];  // d-th largest non-shared
            for (int v : s)
                if (v != omit) e.push_back(v);
            edges.push_back(std::move(e));
        }
    }
    return UniformHypergraph{n, r, std::move(edges)};
}

// Full tight cycle: every window of r cyclically consecutive vertices.
inline UniformHypergraph gen_tight_cycle(int n, int r) {
    if (r < 3 || r >= n)
        throw std::invalid_argument("tight_cycle: need 3 <= r < n");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e;
        for (int j = 0; j < r; ++j) e.push_back((i + j) % n);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return UniformHypergraph{n, r, std::move(edges)};
}

// Seeded random hypergraph with min degree >= delta. Starts from an
// independent edge sample at the matching density, then greedily repairs the
// lowest-id deficient vertex with uniformly random absent edges through it.
inline UniformHypergraph gen_random_min_degree(int n, int r, long long delta,
                                               uint64_t seed) {
    if (r < 1 || r > n)
        throw std::invalid_argument("random: need 1 <= r <= n");
    long long max_degree = binomial(n - 1, r - 1);
    if (delta < 0 || delta > max_degree)
        throw std::invalid_argument("random: delta floor " +
                                    std::to_string(delta) +
                                    " unreachable, max is " +
                                    std::to_string(max_degree));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> all;
    detail::append_complete(detail::iota_range(0, n), r, all);

    UniformHypergraph h{n, r, {}};
    std::set<std::vector<int>> present;
    double p = max_degree == 0 ? 0.0 : (double)delta / (double)max_degree;
    for (const auto& e : all)
        if (detail::chance(rng, p)) {
            present.insert(e);
            h.edges.push_back(e);
        }

    std::vector<long long> deg(n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    while (true) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] < delta) {
                v = u;
                break;
            }
        if (v < 0) break;
        std::vector<const std::vector<int>*> absent;
        for (const auto& e : all)
            if (edge_contains(e, v) && !present.count(e)) absent.push_back(&e);
        // deg[v] < delta <= max_degree guarantees absent is nonempty
        const auto& pick = *absent[detail::rand_below(rng, absent.size())];
        present.insert(pick);
        h.edges.push_back(pick);
        for (int u : pick) ++deg[u];
    }
    return h;
}

}  // namespace berge
