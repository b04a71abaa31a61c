#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types: r-uniform hypergraphs on vertex set {0..n-1} and Berge
// walks (paths/cycles) inside them. Everything downstream builds on these.

namespace berge {

struct UniformHypergraph {
    int n = 0;  // vertices are 0..n-1
    int r = 0;  // edge arity
    // Each edge strictly increasing, edges pairwise distinct as sets.
    // Edge order is meaningful (walks refer to edges by index).
    std::vector<std::vector<int>> edges;

    bool operator==(const UniformHypergraph&) const = default;
};

// Sorts each edge in place. Input convenience for hand-built instances.
inline UniformHypergraph make_hypergraph(int n, int r,
                                         std::vector<std::vector<int>> edges) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    return UniformHypergraph{n, r, std::move(edges)};
}

inline bool edge_contains(const std::vector<int>& edge, int v) {
    return std::binary_search(edge.begin(), edge.end(), v);
}

inline bool edge_contains(const UniformHypergraph& h, int edge_index, int v) {
    return edge_contains(h.edges[edge_index], v);
}

// Structural check: arity, vertex range, strict sortedness, no duplicate
// edges. Returns std::nullopt when fine, otherwise a description naming the
// first offending edge.
inline std::optional<std::string> validate(const UniformHypergraph& h) {
    if (h.n < 0) return "vertex count is negative";
    if (h.r < 1) return "arity must be at least 1";
    for (size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if ((int)e.size() != h.r)
            return "edge " + std::to_string(i) + " has " +
                   std::to_string(e.size()) + " vertices, expected " +
                   std::to_string(h.r);
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= h.n)
                return "edge " + std::to_string(i) + " has out-of-range vertex " +
                       std::to_string(e[j]);
            if (j > 0 && e[j] <= e[j - 1])
                return "edge " + std::to_string(i) +
                       " is not strictly increasing";
        }
    }
    // Duplicate detection on a sorted copy of the index list so the reported
    // index is the later occurrence in the original order.
    std::vector<size_t> idx(h.edges.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (h.edges[a] != h.edges[b]) return h.edges[a] < h.edges[b];
        return a < b;
    });
    for (size_t i = 1; i < idx.size(); ++i)
        if (h.edges[idx[i]] == h.edges[idx[i - 1]])
            return "duplicate edge at index " +
                   std::to_string(std::max(idx[i], idx[i - 1]));
    return std::nullopt;
}

struct DegreeProfile {
    std::vector<long long> degree;  // indexed by vertex
    long long min_degree = 0;
};

inline DegreeProfile degree_profile(const UniformHypergraph& h) {
    DegreeProfile p;
    p.degree.assign(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++p.degree[v];
    p.min_degree = 0;
    if (h.n > 0)
        p.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
    return p;
}

// A Berge walk: distinct vertices v_0..v_{m-1} plus distinct edge indices,
// where edge i must contain the consecutive pair {v_i, v_{i+1}}. A cycle has
// as many edges as vertices (the last edge wraps to v_0) and at least three
// vertices; a path has one fewer edge and may be a single vertex.
struct BergeWalk {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    std::vector<int> vertices;
    std::vector<int> edge_indices;

    bool operator==(const BergeWalk&) const = default;
};

inline std::optional<std::string> validate_walk(const UniformHypergraph& h,
                                                const BergeWalk& w) {
    const size_t m = w.vertices.size();
    if (w.kind == BergeWalk::Kind::cycle) {
        if (m < 3) return "cycle needs at least 3 vertices";
        if (w.edge_indices.size() != m)
            return "cycle needs exactly as many edges as vertices";
    } else {
        if (m < 1) return "path needs at least 1 vertex";
        if (w.edge_indices.size() + 1 != m)
            return "path needs exactly one edge fewer than vertices";
    }
    std::vector<char> seen_v(h.n, 0);
    for (size_t i = 0; i < m; ++i) {
        int v = w.vertices[i];
        if (v < 0 || v >= h.n)
            return "walk vertex at position " + std::to_string(i) +
                   " is out of range";
        if (seen_v[v])
            return "walk vertex " + std::to_string(v) +
                   " repeats at position " + std::to_string(i);
        seen_v[v] = 1;
    }
    std::vector<char> seen_e(h.edges.size(), 0);
    for (size_t i = 0; i < w.edge_indices.size(); ++i) {
        int ei = w.edge_indices[i];
        if (ei < 0 || ei >= (int)h.edges.size())
            return "walk edge index at position " + std::to_string(i) +
                   " is out of range";
        if (seen_e[ei])
            return "walk edge " + std::to_string(ei) +
                   " repeats at position " + std::to_string(i);
        seen_e[ei] = 1;
        int a = w.vertices[i];
        int b = w.vertices[(i + 1) % m];
        const auto& edge = h.edges[ei];
        if (!edge_contains(edge, a) || !edge_contains(edge, b))
            return "edge at walk position " + std::to_string(i) +
                   " does not contain the consecutive pair {" +
                   std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return std::nullopt;
}

// Text format: first non-comment line "n r", then one edge per non-empty
// line as r space-separated vertex ids. '#' starts a comment. Duplicate edge
// lines are dropped (first occurrence wins); edge order is otherwise kept.
struct BhgError : std::runtime_error {
    explicit BhgError(const std::string& what) : std::runtime_error(what) {}
};

inline UniformHypergraph parse_bhg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    UniformHypergraph h;
    std::vector<std::vector<int>> sorted_seen;
    auto strip = [](std::string s) {
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        if (!have_header) {
            long long n, r;
            if (!(fields >> n >> r) || !(fields >> std::ws).eof())
                throw BhgError("line " + std::to_string(lineno) +
                               ": header must be two integers \"n r\"");
            if (n < 0 || r < 1)
                throw BhgError("line " + std::to_string(lineno) +
                               ": header values out of range");
            h.n = (int)n;
            h.r = (int)r;
            have_header = true;
            continue;
        }
        std::vector<int> edge;
        long long v;
        while (fields >> v) {
            if (v < 0 || v >= h.n)
                throw BhgError("line " + std::to_string(lineno) +
                               ": vertex " + std::to_string(v) +
                               " out of range");
            edge.push_back((int)v);
        }
        if (!fields.eof())
            throw BhgError("line " + std::to_string(lineno) +
                           ": edge line has a non-integer field");
        if ((int)edge.size() != h.r)
            throw BhgError("line " + std::to_string(lineno) + ": edge has " +
                           std::to_string(edge.size()) +
                           " vertices, expected " + std::to_string(h.r));
        std::sort(edge.begin(), edge.end());
        for (size_t j = 1; j < edge.size(); ++j)
            if (edge[j] == edge[j - 1])
                throw BhgError("line " + std::to_string(lineno) +
                               ": edge repeats vertex " +
                               std::to_string(edge[j]));
        if (std::find(sorted_seen.begin(), sorted_seen.end(), edge) !=
            sorted_seen.end())
            continue;  // duplicate line, keep the first
        sorted_seen.push_back(edge);
        h.edges.push_back(std::move(edge));
    }
    if (!have_header) throw BhgError("missing header line \"n r\"");
    return h;
}

inline std::string serialize_bhg(const UniformHypergraph& h) {
    std::ostringstream out;
    out << h.n << ' ' << h.r << '\n';
    for (const auto& e : h.edges) {
        for (size_t j = 0; j < e.size(); ++j) {
            if (j) out << ' ';
            out << e[j];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace berge
