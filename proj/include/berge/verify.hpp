#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/engine.hpp"
#include "berge/json_io.hpp"
#include "berge/solver.hpp"
#include "berge/thresholds.hpp"

// Theorem-verification sweeps: sharpness of the constructions, sufficiency of
// the degree thresholds on exhaustive or sampled instance sets, and engine
// stuck-rates, persisted as one NDJSON record per work unit.

namespace berge {

struct CellSpec {
    int n = 0, r = 0, k = 0;
    bool exhaustive = false;
    bool engine = true;  // also run the local-search engine per instance
};

struct SweepConfig {
    std::vector<CellSpec> grid;
    long long samples_per_cell = 100;
    uint64_t seed = 0;
    SearchBudget budget;
    int jobs = 1;
    bool deterministic = false;  // exclude wall-clock fields from output
};

inline std::optional<std::string> validate_config(const SweepConfig& cfg) {
    if (cfg.grid.empty()) return "grid is empty";
    if (cfg.samples_per_cell < 1) return "samples_per_cell must be positive";
    if (cfg.jobs < 1) return "jobs must be positive";
    for (size_t i = 0; i < cfg.grid.size(); ++i) {
        const auto& c = cfg.grid[i];
        std::string at = "cell " + std::to_string(i) + ": ";
        if (c.r < 3 || c.r >= c.n) return at + "need 3 <= r < n";
        if (c.k < 3 || c.k > c.n) return at + "need 3 <= k <= n";
        if (c.r > t_of(c.n) && c.k < c.r)
            return at + "k < r has no circumference threshold when r > t";
        if (c.exhaustive && (c.n > 6 || c.r != 3))
            return at + "exhaustive cells are limited to n <= 6, r = 3";
    }
    return std::nullopt;
}

inline ThresholdAnswer cell_threshold(int n, int r, int k) {
    return k == n ? hamiltonian_threshold(n, r)
                  : circumference_threshold(n, r, k);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
    uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1) +
                 0xbf58476d1ce4e5b9ull * (c + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Seeded instance meeting the cell's degree floor; when the half-length
// theorem governs the cell (r > t) the edge count is topped up to k so both
// hypotheses hold.
inline UniformHypergraph cell_instance(int n, int r, int k, long long delta,
                                       uint64_t seed) {
    auto h = gen_random_min_degree(n, r, delta, seed);
    if (r > t_of(n) && (long long)h.edges.size() < k) {
        std::mt19937_64 rng(seed ^ 0xd1342543de82ef95ull);
        std::set<std::vector<int>> present(h.edges.begin(), h.edges.end());
        std::vector<int> pool(n);
        while ((long long)h.edges.size() < k) {
            for (int i = 0; i < n; ++i) pool[i] = i;
            std::vector<int> e;
            for (int i = 0; i < r; ++i) {
                int j = i + (int)detail::rand_below(rng, n - i);
                std::swap(pool[i], pool[j]);
                e.push_back(pool[i]);
            }
            std::sort(e.begin(), e.end());
            if (present.insert(e).second) h.edges.push_back(e);
        }
    }
    return h;
}

// Every hypergraph over the full r-subset candidate list whose minimum
// degree reaches floor_delta, via include/exclude with a suffix-count prune
// that makes every visited leaf qualify. Returns the leaf count.
template <typename Fn>
inline long long for_each_min_degree_subset(int n, int r, long long floor_delta,
                                            Fn&& fn) {
    std::vector<std::vector<int>> cands;
    detail::append_complete(detail::iota_range(0, n), r, cands);
    int total = (int)cands.size();
    std::vector<std::vector<long long>> suf(total + 1,
                                            std::vector<long long>(n, 0));
    for (int i = total - 1; i >= 0; --i) {
        suf[i] = suf[i + 1];
        for (int v : cands[i]) ++suf[i][v];
    }
    std::vector<long long> deg(n, 0);
    std::vector<std::vector<int>> cur;
    long long leaves = 0;
    auto rec = [&](auto&& self, int i) -> void {
        for (int v = 0; v < n; ++v)
            if (deg[v] + suf[i][v] < floor_delta) return;
        if (i == total) {
            fn((const std::vector<std::vector<int>>&)cur, leaves);
            ++leaves;
            return;
        }
        cur.push_back(cands[i]);
        for (int v : cands[i]) ++deg[v];
        self(self, i + 1);
        for (int v : cands[i]) --deg[v];
        cur.pop_back();
        self(self, i + 1);
    };
    rec(rec, 0);
    return leaves;
}

namespace detail {

inline json sharpness_entry(const std::string& family,
                            const UniformHypergraph& h, long long expect_delta,
                            bool& pass) {
    auto prof = degree_profile(h);
    json j{{"family", family},
           {"delta", prof.min_degree},
           {"expected_delta", expect_delta},
           {"delta_ok", prof.min_degree == expect_delta}};
    if (prof.min_degree != expect_delta) pass = false;
    return j;
}

// A cycle longer than k does not contain one of length exactly k, so both
// directions scan: refutation walks every length in [k, n], existence stops
// at the first length that closes.
struct AtLeast {
    SolveOutcome::Verdict verdict = SolveOutcome::Verdict::exhausted;
    long long nodes = 0;
    int found_length = 0;
};

inline AtLeast solve_at_least(const UniformHypergraph& h, int k,
                              const SearchBudget& budget) {
    AtLeast out;
    for (int kk = k; kk <= h.n; ++kk) {
        auto sol = find_berge_cycle(h, kk, budget);
        out.nodes += sol.nodes_explored;
        if (sol.verdict != SolveOutcome::Verdict::exhausted) {
            out.verdict = sol.verdict;
            out.found_length = kk;
            return out;
        }
    }
    return out;
}

inline void sharpness_no_k_cycle(json& j, const UniformHypergraph& h, int k,
                                 const SearchBudget& budget, bool& pass) {
    auto out = solve_at_least(h, k, budget);
    j["k"] = k;
    j["k_cycle"] = verdict_name(out.verdict);
    if (out.verdict != SolveOutcome::Verdict::exhausted) pass = false;
}

}  // namespace detail

// Sharpness checks for whichever construction fits the cell exactly:
// degree one below the threshold and no cycle of the guaranteed length.
inline std::optional<json> cell_sharpness(const CellSpec& cell,
                                          const ThresholdAnswer& thr,
                                          const SearchBudget& budget,
                                          bool& pass) {
    int n = cell.n, r = cell.r, k = cell.k;
    long long expect = thr.bound - 1;
    json out = json::array();
    if (k == n) {
        if (r <= t_of(n)) {
            auto h1 = gen_h1(n, r);
            json e1 = detail::sharpness_entry("h1", h1, expect, pass);
            detail::sharpness_no_k_cycle(e1, h1, k, budget, pass);
            if (r == 3) {
                auto circ = circumference(h1, budget);
                e1["circumference"] = circ.length;
                e1["expected_circumference"] = (n + 1) / 2;
                if (circ.length != (n + 1) / 2 || circ.length_is_lower_bound)
                    pass = false;
            }
            out.push_back(e1);
            auto h2 = gen_h2(n, r);
            json e2 = detail::sharpness_entry("h2", h2, expect, pass);
            detail::sharpness_no_k_cycle(e2, h2, k, budget, pass);
            out.push_back(e2);
        } else {
            auto h3 = gen_h3(n, r);
            json e3 = detail::sharpness_entry("h3", h3, expect, pass);
            detail::sharpness_no_k_cycle(e3, h3, k, budget, pass);
            out.push_back(e3);
        }
    } else if (k <= r + 1 && r <= t_of(n) && (n - 1) % r == 0) {
        auto h5 = gen_h5(n, r, k);
        json e5 = detail::sharpness_entry("h5", h5, expect, pass);
        detail::sharpness_no_k_cycle(e5, h5, k, budget, pass);
        out.push_back(e5);
    } else if (k >= r + 2 && k < t_of(n) + 2 && (n - 1) % (k - 2) == 0) {
        auto h4 = gen_h4(n, r, k);
        json e4 = detail::sharpness_entry("h4", h4, expect, pass);
        auto circ = circumference(h4, budget);
        e4["circumference"] = circ.length;
        e4["expected_circumference"] = k - 1;
        if (circ.length != k - 1 || circ.length_is_lower_bound) pass = false;
        out.push_back(e4);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

struct CellRun {
    std::vector<json> records;  // units actually processed, in order
    long long units_total = 0;  // including skipped units
    std::optional<json> sharpness;
    bool sharpness_pass = true;
};

namespace detail {

constexpr long long kExhaustiveBatch = 4096;

inline const char* engine_field(const UniformHypergraph& h, int k) {
    if (k > (int)h.edges.size() || k > h.n) return "off";
    RunResult er = engine_run(h, k);
    return er.status == RunResult::Status::found ? "found" : "stuck";
}

}  // namespace detail

inline CellRun run_cell(const SweepConfig& cfg, size_t cell_index,
                        long long skip_units) {
    const CellSpec& cell = cfg.grid[cell_index];
    CellRun out;
    ThresholdAnswer thr = cell_threshold(cell.n, cell.r, cell.k);
    out.sharpness = cell_sharpness(cell, thr, cfg.budget, out.sharpness_pass);
    auto base_record = [&]() {
        json j;
        j["cell"] = cell_index;
        j["n"] = cell.n;
        j["r"] = cell.r;
        j["k"] = cell.k;
        return j;
    };
    if (cell.exhaustive) {
        json batch;
        long long batch_count = 0, batch_start = 0, batch_viol = 0;
        long long engine_runs = 0, engine_stuck = 0;
        json payloads = json::array();
        auto flush = [&]() {
            if (batch_count == 0) return;
            json j = base_record();
            j["type"] = "batch";
            j["start"] = batch_start;
            j["count"] = batch_count;
            j["violations"] = batch_viol;
            if (cell.engine) {
                j["engine_runs"] = engine_runs;
                j["engine_stuck"] = engine_stuck;
            }
            if (!payloads.empty()) j["violation_payloads"] = payloads;
            out.records.push_back(std::move(j));
            batch_count = batch_viol = engine_runs = engine_stuck = 0;
            payloads = json::array();
        };
        long long leaves = for_each_min_degree_subset(
            cell.n, cell.r, thr.bound,
            [&](const std::vector<std::vector<int>>& edges, long long leaf) {
                long long unit = leaf / detail::kExhaustiveBatch;
                if (unit < skip_units) return;
                if (batch_count == 0) batch_start = leaf;
                UniformHypergraph h{cell.n, cell.r, edges};
                auto sol = detail::solve_at_least(h, cell.k, cfg.budget);
                if (sol.verdict != SolveOutcome::Verdict::found) {
                    ++batch_viol;
                    json v;
                    v["index"] = leaf;
                    v["verdict"] = verdict_name(sol.verdict);
                    v["bhg"] = serialize_bhg(h);
                    payloads.push_back(std::move(v));
                }
                if (cell.engine) {
                    ++engine_runs;
                    if (std::string(detail::engine_field(h, cell.k)) == "stuck")
                        ++engine_stuck;
                }
                ++batch_count;
                if ((leaf + 1) % detail::kExhaustiveBatch == 0) flush();
            });
        flush();
        out.units_total =
            (leaves + detail::kExhaustiveBatch - 1) / detail::kExhaustiveBatch;
    } else {
        out.units_total = cfg.samples_per_cell;
        for (long long i = skip_units; i < cfg.samples_per_cell; ++i) {
            uint64_t seed = mix_seed(cfg.seed, cell_index, (uint64_t)i);
            auto h = cell_instance(cell.n, cell.r, cell.k, thr.bound, seed);
            auto sol = detail::solve_at_least(h, cell.k, cfg.budget);
            json j = base_record();
            j["type"] = "instance";
            j["index"] = i;
            j["seed"] = seed;
            j["edges"] = (long long)h.edges.size();
            j["verdict"] = verdict_name(sol.verdict);
            j["nodes"] = sol.nodes;
            if (sol.found_length > cell.k) j["found_length"] = sol.found_length;
            bool violation = sol.verdict == SolveOutcome::Verdict::exhausted;
            bool unresolved =
                sol.verdict == SolveOutcome::Verdict::budget_exceeded;
            j["violation"] = violation;
            if (unresolved) j["unresolved"] = true;
            if (violation) j["bhg"] = serialize_bhg(h);
            if (cell.engine) j["engine"] = detail::engine_field(h, cell.k);
            out.records.push_back(std::move(j));
        }
    }
    return out;
}

struct SweepRun {
    std::vector<json> new_records;
    std::vector<json> sharpness;  // one entry (possibly null) per cell
    std::vector<ThresholdAnswer> thresholds;
    bool sharpness_pass = true;
    long long units_total = 0;
};

// Processes every cell, skipping the first resume_units work units (records
// already persisted by an interrupted run). With jobs > 1, cells are
// dispatched to a pool in waves and merged in cell order; resuming forces
// sequential execution so the unit arithmetic stays exact.
inline SweepRun run_sweep(const SweepConfig& cfg, long long resume_units = 0,
                          std::ostream* progress = nullptr) {
    if (auto err = validate_config(cfg))
        throw std::invalid_argument("invalid sweep config: " + *err);
    SweepRun run;
    for (const auto& cell : cfg.grid)
        run.thresholds.push_back(cell_threshold(cell.n, cell.r, cell.k));
    size_t cells = cfg.grid.size();
    run.sharpness.resize(cells);
    int jobs = cfg.jobs;
    if (resume_units > 0) jobs = 1;
    std::vector<CellRun> done(cells);
    if (jobs <= 1) {
        long long skip = resume_units;
        for (size_t c = 0; c < cells; ++c) {
            done[c] = run_cell(cfg, c, skip);
            skip = std::max(0ll, skip - done[c].units_total);
            if (progress)
                *progress << "cell " << c << "/" << cells << " done, "
                          << done[c].records.size() << " records\n";
        }
    } else {
        for (size_t wave = 0; wave < cells; wave += jobs) {
            size_t hi = std::min(cells, wave + jobs);
            std::vector<std::future<CellRun>> futs;
            for (size_t c = wave; c < hi; ++c)
                futs.push_back(std::async(std::launch::async, [&cfg, c]() {
                    return run_cell(cfg, c, 0);
                }));
            for (size_t c = wave; c < hi; ++c) {
                done[c] = futs[c - wave].get();
                if (progress)
                    *progress << "cell " << c << "/" << cells << " done, "
                              << done[c].records.size() << " records\n";
            }
        }
    }
    for (size_t c = 0; c < cells; ++c) {
        auto& cr = done[c];
        run.units_total += cr.units_total;
        if (cr.sharpness) run.sharpness[c] = *cr.sharpness;
        if (!cr.sharpness_pass) run.sharpness_pass = false;
        for (auto& rec : cr.records) run.new_records.push_back(std::move(rec));
    }
    return run;
}

// Aggregates all persisted records (prior runs plus this one) into the
// final report. Field order is fixed so identical configs give identical
// bytes under --deterministic.
inline json build_report(const SweepConfig& cfg, const SweepRun& run,
                         const std::vector<json>& all_records,
                         bool* pass_out = nullptr) {
    size_t cells = cfg.grid.size();
    struct Agg {
        long long instances = 0, violations = 0, unresolved = 0;
        long long engine_runs = 0, engine_stuck = 0;
        json payloads = json::array();
    };
    std::vector<Agg> agg(cells);
    for (const auto& rec : all_records) {
        size_t c = rec.at("cell").get<size_t>();
        if (c >= cells) continue;
        Agg& a = agg[c];
        std::string type = rec.value("type", "instance");
        if (type == "batch") {
            a.instances += rec.at("count").get<long long>();
            a.violations += rec.at("violations").get<long long>();
            a.engine_runs += rec.value("engine_runs", 0ll);
            a.engine_stuck += rec.value("engine_stuck", 0ll);
            if (rec.contains("violation_payloads"))
                for (const auto& p : rec.at("violation_payloads"))
                    a.payloads.push_back(p);
        } else {
            ++a.instances;
            if (rec.value("violation", false)) {
                ++a.violations;
                json p{{"index", rec.at("index")}, {"bhg", rec.at("bhg")}};
                a.payloads.push_back(std::move(p));
            }
            if (rec.value("unresolved", false)) ++a.unresolved;
            if (rec.contains("engine")) {
                ++a.engine_runs;
                if (rec.at("engine").get<std::string>() == "stuck")
                    ++a.engine_stuck;
            }
        }
    }
    json cells_json = json::array();
    long long ti = 0, tv = 0, tu = 0;
    bool pass = run.sharpness_pass;
    for (size_t c = 0; c < cells; ++c) {
        const auto& cell = cfg.grid[c];
        const auto& thr = run.thresholds[c];
        json j;
        j["n"] = cell.n;
        j["r"] = cell.r;
        j["k"] = cell.k;
        j["exhaustive"] = cell.exhaustive;
        j["regime"] = thr.regime;
        j["threshold"] = thr.bound;
        if (cell.r > t_of(cell.n)) {
            auto half = half_k_threshold(cell.n, cell.r, cell.k);
            j["half_k_bound"] = half.bound;
            j["min_edges"] = *half.min_edges;
        }
        j["instances"] = agg[c].instances;
        j["violations"] = agg[c].violations;
        j["unresolved"] = agg[c].unresolved;
        if (agg[c].engine_runs > 0) {
            j["engine_runs"] = agg[c].engine_runs;
            j["engine_stuck"] = agg[c].engine_stuck;
        }
        j["sharpness"] = run.sharpness[c];
        if (!agg[c].payloads.empty())
            j["violation_payloads"] = agg[c].payloads;
        cells_json.push_back(std::move(j));
        ti += agg[c].instances;
        tv += agg[c].violations;
        tu += agg[c].unresolved;
    }
    pass = pass && tv == 0 && tu == 0;
    json report;
    report["config"] = json{{"samples_per_cell", cfg.samples_per_cell},
                            {"seed", cfg.seed},
                            {"jobs", cfg.jobs},
                            {"deterministic", cfg.deterministic}};
    report["cells"] = std::move(cells_json);
    report["total_instances"] = ti;
    report["total_violations"] = tv;
    report["total_unresolved"] = tu;
    report["pass"] = pass;
    if (pass_out) *pass_out = pass;
    return report;
}

}  // namespace berge
