#pragma once

#include <string>

#include <json.hpp>

#include "berge/engine.hpp"
#include "berge/hypergraph.hpp"
#include "berge/lemma_lab.hpp"
#include "berge/solver.hpp"
#include "berge/thresholds.hpp"

// JSON views of the core types. Keys are stable: reports get byte-compared
// across runs, so ordered maps only and no floats unless unavoidable.

namespace berge {

using json = nlohmann::ordered_json;

inline json walk_to_json(const BergeWalk& w) {
    return json{
        {"kind", w.kind == BergeWalk::Kind::cycle ? "cycle" : "path"},
        {"vertices", w.vertices},
        {"edge_indices", w.edge_indices},
    };
}

inline BergeWalk walk_from_json(const json& j) {
    BergeWalk w;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cycle")
        w.kind = BergeWalk::Kind::cycle;
    else if (kind == "path")
        w.kind = BergeWalk::Kind::path;
    else
        throw std::invalid_argument("walk kind must be cycle or path");
    w.vertices = j.at("vertices").get<std::vector<int>>();
    w.edge_indices = j.at("edge_indices").get<std::vector<int>>();
    return w;
}

inline const char* verdict_name(SolveOutcome::Verdict v) {
    switch (v) {
        case SolveOutcome::Verdict::found: return "found";
        case SolveOutcome::Verdict::exhausted: return "exhausted";
        case SolveOutcome::Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

inline json outcome_to_json(const SolveOutcome& o) {
    json j{
        {"verdict", verdict_name(o.verdict)},
        {"nodes_explored", o.nodes_explored},
    };
    if (o.witness) j["witness"] = walk_to_json(*o.witness);
    if (!o.reason.empty()) j["reason"] = o.reason;
    return j;
}

inline json threshold_to_json(const ThresholdAnswer& a) {
    json j{{"regime", a.regime}, {"bound", a.bound}};
    if (a.min_edges) j["min_edges"] = *a.min_edges;
    return j;
}

inline json rank_to_json(const PairRank& r) {
    return json{{"c_len", r.c_len},
                {"p_len", r.p_len},
                {"cover_c", r.cover_c},
                {"cover_p", r.cover_p}};
}

inline json move_to_json(const Move& m) {
    json j{{"kind", move_kind_name(m.kind)}};
    if (m.at_back) j["at_back"] = true;
    if (m.on_path) j["on_path"] = true;
    if (m.vertex >= 0) j["vertex"] = m.vertex;
    if (m.edge_a >= 0) j["edge_a"] = m.edge_a;
    if (m.edge_b >= 0) j["edge_b"] = m.edge_b;
    if (m.cycle_pos >= 0) j["cycle_pos"] = m.cycle_pos;
    if (m.path_pos >= 0) j["path_pos"] = m.path_pos;
    if (!m.prelude.empty()) {
        json pre = json::array();
        for (const auto& p : m.prelude) pre.push_back(move_to_json(p));
        j["prelude"] = pre;
    }
    return j;
}

inline json run_result_to_json(const RunResult& r, bool with_trace) {
    json j{
        {"status", r.status == RunResult::Status::found ? "found" : "stuck"},
        {"steps", r.steps},
    };
    if (r.witness) j["witness"] = walk_to_json(*r.witness);
    if (r.pair) {
        j["cycle"] = walk_to_json(r.pair->cycle);
        j["path"] = walk_to_json(r.pair->path);
        j["rank"] = rank_to_json(pair_rank(*r.pair));
    }
    if (r.max_steps_exceeded) j["max_steps_exceeded"] = true;
    if (r.no_initial_cycle) j["no_initial_cycle"] = true;
    if (with_trace) {
        json t = json::array();
        for (const auto& e : r.trace)
            t.push_back(json{{"move", move_to_json(e.move)},
                             {"before", rank_to_json(e.before)},
                             {"after", rank_to_json(e.after)}});
        j["trace"] = t;
    }
    return j;
}

inline json indep_report_to_json(const IndepReport& r) {
    return json{{"s", r.s},
                {"c", r.c},
                {"bound", r.bound},
                {"max_size", r.max_size},
                {"attained", r.attained},
                {"witness_edges", r.witness_edges},
                {"witness_vertices", r.witness_vertices},
                {"violations", r.violations}};
}

inline json verc_report_to_json(const VercReport& r) {
    return json{{"s", r.s},
                {"q", r.q},
                {"bound_equal", r.bound_equal},
                {"max_equal", r.max_equal},
                {"witness_equal", r.witness_equal},
                {"bound_diff", r.bound_diff},
                {"max_diff", r.max_diff},
                {"witness_diff_a", r.witness_diff_a},
                {"witness_diff_b", r.witness_diff_b},
                {"violations", r.violations}};
}

inline json verc2_report_to_json(const Verc2Report& r) {
    return json{{"s", r.s},
                {"q", r.q},
                {"bound", r.bound},
                {"max_size", r.max_size},
                {"witness_a", r.witness_a},
                {"witness_b", r.witness_b},
                {"violations", r.violations}};
}

}  // namespace berge
