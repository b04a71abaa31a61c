#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Brute-force checkers for the standalone combinatorial lemmas about a graph
// cycle v_0..v_{s-1}: edge position i joins vertices i and i+1 (mod s).
// Positions are bitmask bits; every bound is verified against every valid
// configuration, not just the maximum.

namespace berge {

inline int cyclic_distance(int i, int j, int s) {
    int d = (i - j) % s;
    if (d < 0) d += s;
    return d < s - d ? d : s - d;
}

namespace detail {

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline unsigned rot1(unsigned mask, int s) {
    return ((mask << 1) | (mask >> (s - 1))) & ((1u << s) - 1);
}

inline std::vector<int> mask_bits(unsigned mask, int s) {
    std::vector<int> out;
    for (int i = 0; i < s; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

}  // namespace detail

// Validity predicates, exposed so tests can probe rotated configurations
// against the exact same definition the enumerators use.

// I is an independent vertex set avoiding both endpoints of every edge in A.
inline bool indep_config_valid(int s, unsigned a_edges, unsigned i_vertices) {
    unsigned full = (1u << s) - 1;
    unsigned blocked = (a_edges | detail::rot1(a_edges, s)) & full;
    if (i_vertices & blocked) return false;
    return (i_vertices & detail::rot1(i_vertices, s)) == 0;
}

// Edge subsets A, B: every cross pair is either the same position or at
// cyclic distance >= q.
inline bool verc_config_valid(int s, int q, unsigned a_edges,
                              unsigned b_edges) {
    if (a_edges == 0 || b_edges == 0) return false;
    if (__builtin_popcount(b_edges) < __builtin_popcount(a_edges))
        return false;
    for (int i = 0; i < s; ++i) {
        if (!(a_edges >> i & 1)) continue;
        for (int j = 0; j < s; ++j) {
            if (!(b_edges >> j & 1)) continue;
            if (i != j && cyclic_distance(i, j, s) < q) return false;
        }
    }
    return true;
}

// Independent vertex subsets A, B with B-A nonempty and every vertex of A at
// cyclic distance >= q from every vertex of B-A.
inline bool verc2_config_valid(int s, int q, unsigned a_verts,
                               unsigned b_verts) {
    if (a_verts == 0 || b_verts == 0) return false;
    if (a_verts & detail::rot1(a_verts, s)) return false;
    if (b_verts & detail::rot1(b_verts, s)) return false;
    unsigned diff = b_verts & ~a_verts;
    if (diff == 0) return false;
    for (int i = 0; i < s; ++i) {
        if (!(a_verts >> i & 1)) continue;
        for (int j = 0; j < s; ++j) {
            if (!(diff >> j & 1)) continue;
            if (cyclic_distance(i, j, s) < q) return false;
        }
    }
    return true;
}

struct IndepReport {
    int s = 0, c = 0;
    long long bound = 0;    // ceil((s-1-c)/2)
    long long max_size = 0; // attained maximum |I|
    bool attained = false;
    std::vector<int> witness_edges;
    std::vector<int> witness_vertices;
    long long violations = 0;  // configs exceeding the bound (expected 0)
};

// Maximum independent set disjoint from c chosen cycle edges, over every
// choice of those edges.
inline IndepReport max_independent_disjoint(int s, int c) {
    if (s < 3 || s > 24) throw std::invalid_argument("need 3 <= s <= 24");
    if (c < 0 || c > s) throw std::invalid_argument("need 0 <= c <= s");
    IndepReport rep;
    rep.s = s;
    rep.c = c;
    rep.bound = (s - 1 - c + 1) / 2;  // ceil over a value >= -1
    rep.max_size = -1;
    unsigned full = (1u << s) - 1;
    for (unsigned a = 0; a <= full; ++a) {
        if (__builtin_popcount(a) != c) continue;
        unsigned blocked = (a | detail::rot1(a, s)) & full;
        unsigned allowed = full & ~blocked;
        // All subsets of allowed, including empty.
        unsigned i_set = allowed;
        while (true) {
            if ((i_set & detail::rot1(i_set, s)) == 0) {
                long long size = __builtin_popcount(i_set);
                if (size > rep.max_size) {
                    rep.max_size = size;
                    rep.witness_edges = detail::mask_bits(a, s);
                    rep.witness_vertices = detail::mask_bits(i_set, s);
                }
                if (size > rep.bound) ++rep.violations;
            }
            if (i_set == 0) break;
            i_set = (i_set - 1) & allowed;
        }
    }
    rep.attained = rep.max_size == rep.bound;
    return rep;
}

struct VercReport {
    int s = 0, q = 0;
    // Case B == A: a <= s/q.
    long long bound_equal = 0;  // floor(s/q)
    long long max_equal = -1;   // -1: no valid configuration
    std::vector<int> witness_equal;
    // Case B != A: a <= s/2 - q + 1.
    long long bound_diff = 0;  // floor((s - 2q + 2) / 2), may be negative
    long long max_diff = -1;
    std::vector<int> witness_diff_a, witness_diff_b;
    long long violations = 0;
};

// Separated edge-subset configurations. For each nonempty A the positions
// usable in B are those at distance >= q from every other element of A;
// B = A is valid iff A itself is q-separated, and a B != A exists iff the
// usable set properly differs from A while being at least as large.
inline VercReport max_verc_config(int s, int q) {
    if (s < 3 || s > 24) throw std::invalid_argument("need 3 <= s <= 24");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    VercReport rep;
    rep.s = s;
    rep.q = q;
    rep.bound_equal = s / q;
    rep.bound_diff = detail::floor_div(s - 2 * (long long)q + 2, 2);
    unsigned full = (1u << s) - 1;
    for (unsigned a = 1; a <= full; ++a) {
        long long size = __builtin_popcount(a);
        unsigned allowed = 0;
        for (int j = 0; j < s; ++j) {
            bool ok = true;
            for (int i = 0; i < s && ok; ++i)
                if ((a >> i & 1) && i != j && cyclic_distance(i, j, s) < q)
                    ok = false;
            if (ok) allowed |= 1u << j;
        }
        if ((a & ~allowed) == 0) {  // B = A is a valid configuration
            // The gap argument behind s/q needs two edges; a lone edge has
            // no pair to separate and stays exempt (matters only for q > s).
            if (size >= 2 && size > rep.bound_equal) ++rep.violations;
            if (size > rep.max_equal) {
                rep.max_equal = size;
                rep.witness_equal = detail::mask_bits(a, s);
            }
        }
        bool diff_exists =
            __builtin_popcount(allowed) >= size && allowed != a;
        if (diff_exists) {
            if (size > rep.bound_diff) ++rep.violations;
            if (size > rep.max_diff) {
                rep.max_diff = size;
                rep.witness_diff_a = detail::mask_bits(a, s);
                rep.witness_diff_b = detail::mask_bits(allowed, s);
            }
        }
    }
    return rep;
}

struct Verc2Report {
    int s = 0, q = 0;
    long long bound = 0;  // floor((s - 2q + 2) / 2)
    long long max_size = -1;
    std::vector<int> witness_a, witness_b;
    long long violations = 0;
};

// Independent vertex subsets A with some admissible B (equivalently: some
// vertex outside A at distance >= q from all of A; that vertex alone is an
// admissible B, and any admissible B-A lies in the same far set).
inline Verc2Report max_verc2_config(int s, int q) {
    if (s < 3 || s > 24) throw std::invalid_argument("need 3 <= s <= 24");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    Verc2Report rep;
    rep.s = s;
    rep.q = q;
    rep.bound = detail::floor_div(s - 2 * (long long)q + 2, 2);
    unsigned full = (1u << s) - 1;
    for (unsigned a = 1; a <= full; ++a) {
        if (a & detail::rot1(a, s)) continue;  // A must be independent
        int far = -1;
        for (int j = 0; j < s && far < 0; ++j) {
            if (a >> j & 1) continue;
            bool ok = true;
            for (int i = 0; i < s && ok; ++i)
                if ((a >> i & 1) && cyclic_distance(i, j, s) < q) ok = false;
            if (ok) far = j;
        }
        if (far < 0) continue;
        long long size = __builtin_popcount(a);
        if (size > rep.bound) ++rep.violations;
        if (size > rep.max_size) {
            rep.max_size = size;
            rep.witness_a = detail::mask_bits(a, s);
            rep.witness_b = {far};
        }
    }
    return rep;
}

}  // namespace berge
