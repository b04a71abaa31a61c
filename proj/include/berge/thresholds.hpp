#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

// Minimum-degree thresholds that guarantee long Berge cycles, keyed by the
// regime pivot t = floor((n-1)/2). Bounds feed pass/fail verdicts, so all
// arithmetic is exact and overflow aborts loudly instead of wrapping.

namespace berge {

inline long long t_of(long long n) { return (n - 1) / 2; }

// Exact C(n, k); throws std::overflow_error rather than wrapping.
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= (unsigned __int128)(n - k + i);
        c /= (unsigned __int128)i;  // exact: prefix products of C are integers
        if (c > (unsigned __int128)INT64_MAX)
            throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                                      std::to_string(k) + ") overflows");
    }
    return (long long)c;
}

struct ThresholdAnswer {
    std::string regime;
    long long bound = 0;
    // Extra hypothesis beyond the degree bound: minimum |E(H)| required.
    std::optional<long long> min_edges;

    bool operator==(const ThresholdAnswer&) const = default;
};

namespace detail {
inline void require_uniformity(long long n, long long r) {
    if (r < 3 || r >= n)
        throw std::invalid_argument("need 3 <= r < n, got r=" +
                                    std::to_string(r) + " n=" +
                                    std::to_string(n));
}
}  // namespace detail

// Degree floor that forces a hamiltonian Berge cycle. The two cases
// partition legal r: r <= t, or r > t (which implies r >= n/2).
inline ThresholdAnswer hamiltonian_threshold(long long n, long long r) {
    detail::require_uniformity(n, r);
    long long t = t_of(n);
    if (r <= t) return {"main_a", binomial(t, r - 1) + 1, std::nullopt};
    return {"main_b", r, std::nullopt};
}

// Degree floor that forces a Berge cycle of length k or longer.
inline ThresholdAnswer circumference_threshold(long long n, long long r,
                                               long long k) {
    detail::require_uniformity(n, r);
    long long t = t_of(n);
    if (k < 3 || k > n)
        throw std::invalid_argument("need 3 <= k <= n, got k=" +
                                    std::to_string(k));
    if (r > t) {
        // Large-uniformity regime; stated only for k >= r.
        if (k < r)
            throw std::invalid_argument(
                "r > t regime requires k >= r, got k=" + std::to_string(k) +
                " r=" + std::to_string(r));
        return {"main4", (r * (k - 1)) / n + 1, std::nullopt};
    }
    if (k <= r + 1) return {"main3_a", k - 1, std::nullopt};
    if (k < t + 2) return {"main3_b", binomial(k - 2, r - 1) + 1, std::nullopt};
    return {"main3_c", binomial(t, r - 1) + 1, std::nullopt};
}

// Sharper large-uniformity variant: degree floor ceil(k/2), valid only with
// the side condition |E(H)| >= k (reported via min_edges).
inline ThresholdAnswer half_k_threshold(long long n, long long r,
                                        long long k) {
    detail::require_uniformity(n, r);
    if (r <= t_of(n))
        throw std::invalid_argument("half-k bound needs r > t, got r=" +
                                    std::to_string(r) + " n=" +
                                    std::to_string(n));
    if (k < r || k > n)
        throw std::invalid_argument("need r <= k <= n, got k=" +
                                    std::to_string(k));
    return {"main41", (k + 1) / 2, k};
}

// Classical comparison baseline, kept for reporting only.
inline long long bermond_baseline(long long r, long long k) {
    if (r < 3) throw std::invalid_argument("need r >= 3");
    if (k <= r)
        throw std::invalid_argument("baseline needs k >= r+1, got k=" +
                                    std::to_string(k) + " r=" +
                                    std::to_string(r));
    return binomial(k - 2, r - 1) + r - 1;
}

}  // namespace berge
