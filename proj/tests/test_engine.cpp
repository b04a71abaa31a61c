#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include "berge/constructions.hpp"
#include "berge/engine.hpp"
#include "berge/solver.hpp"

using namespace berge;

namespace {

UniformHypergraph complete_graph(int n, int r) {
    std::vector<std::vector<int>> edges;
    detail::append_complete(detail::iota_range(0, n), r, edges);
    return UniformHypergraph{n, r, std::move(edges)};
}

CyclePathPair make_pair(const UniformHypergraph& h, std::vector<int> cv,
                        std::vector<int> ce, std::vector<int> pv,
                        std::vector<int> pe) {
    CyclePathPair p;
    p.host = &h;
    p.cycle.kind = BergeWalk::Kind::cycle;
    p.cycle.vertices = std::move(cv);
    p.cycle.edge_indices = std::move(ce);
    p.path.kind = BergeWalk::Kind::path;
    p.path.vertices = std::move(pv);
    p.path.edge_indices = std::move(pe);
    return p;
}

int count_kind(const std::vector<Move>& ms, Move::Kind k) {
    int c = 0;
    for (const auto& m : ms) c += m.kind == k;
    return c;
}

}  // namespace

TEST_CASE("rank order follows the four criteria in turn") {
    PairRank a{5, 2, 9, 9}, b{6, 0, 0, 0};
    CHECK(b > a);  // longer cycle beats everything else
    PairRank c{5, 3, 0, 0};
    CHECK(c > a);  // equal cycle, longer path wins
    PairRank d{5, 2, 10, 0};
    CHECK(d > a);
    PairRank e{5, 2, 9, 10};
    CHECK(e > a);
    CHECK(a == PairRank{5, 2, 9, 9});
}

TEST_CASE("rank counts incidences with multiplicity") {
    UniformHypergraph h{5, 3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 4}}};
    auto p = make_pair(h, {0, 1, 2}, {0, 1, 2}, {3}, {});
    REQUIRE_FALSE(validate_pair(p).has_value());
    auto r = pair_rank(p);
    CHECK(r.c_len == 3);
    CHECK(r.p_len == 0);
    CHECK(r.cover_c == 2);  // vertex 3 sits inside two cycle edges
    CHECK(r.cover_p == 0);
}

TEST_CASE("pair validation enforces disjointness") {
    UniformHypergraph h{7, 4, {{0, 1, 3, 4}, {1, 2, 5, 6}, {0, 2, 5, 6}}};
    REQUIRE_FALSE(validate(h).has_value());
    auto p = make_pair(h, {0, 1, 2}, {0, 1, 2}, {3, 4}, {0});
    auto err = validate_pair(p);
    REQUIRE(err.has_value());  // edge 0 serves both walks
    CHECK(err->find("edge") != std::string::npos);

    auto q = make_pair(h, {0, 1, 2}, {0, 1, 2}, {3}, {});
    CHECK_FALSE(validate_pair(q).has_value());
    auto overlap = make_pair(h, {0, 1, 2}, {0, 1, 2}, {2}, {});
    CHECK(validate_pair(overlap).has_value());
    auto short_cycle_no_path = make_pair(h, {0, 1, 2}, {0, 1, 2}, {}, {});
    CHECK(validate_pair(short_cycle_no_path).has_value());
    auto no_host = make_pair(h, {0, 1, 2}, {0, 1, 2}, {3}, {});
    no_host.host = nullptr;
    CHECK(validate_pair(no_host).has_value());
}

TEST_CASE("endpoint insertion builds the five cycle by hand") {
    UniformHypergraph h{
        5, 3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 2, 4}, {1, 3, 4}}};
    REQUIRE_FALSE(validate(h).has_value());
    auto p = make_pair(h, {0, 1, 2, 3}, {0, 1, 2, 3}, {4}, {});
    REQUIRE_FALSE(validate_pair(p).has_value());

    auto moves = applicable_moves(p);
    REQUIRE(moves.size() == 4);
    CHECK(count_kind(moves, Move::Kind::insert_endpoint) == 4);
    for (const auto& mv : moves) CHECK(mv.vertex == -1);

    auto next = apply_move(p, moves[0]);
    CHECK(next.cycle.vertices.size() == 5);
    CHECK(next.path.vertices.empty());
    REQUIRE_FALSE(validate_pair(next).has_value());
    CHECK(pair_rank(next) > pair_rank(p));

    SECTION("the same move is stale against the new pair") {
        CHECK_THROWS_AS(apply_move(next, moves[0]), std::invalid_argument);
        CHECK_THROWS_WITH(apply_move(next, moves[0]),
                          Catch::Matchers::ContainsSubstring("stale"));
    }
}

TEST_CASE("whole-path absorption splices the path into the cycle") {
    UniformHypergraph h{6,
                        3,
                        {{0, 1, 2},
                         {1, 2, 3},
                         {0, 2, 3},
                         {0, 1, 3},
                         {1, 3, 4},
                         {0, 1, 5},
                         {2, 4, 5}}};
    REQUIRE_FALSE(validate(h).has_value());
    auto p = make_pair(h, {0, 1, 2, 3}, {0, 1, 2, 3}, {4, 5}, {6});
    REQUIRE_FALSE(validate_pair(p).has_value());

    auto moves = applicable_moves(p);
    REQUIRE(moves.size() == 3);
    CHECK(count_kind(moves, Move::Kind::absorb_path) == 2);
    CHECK(count_kind(moves, Move::Kind::swap_cover_edge) == 1);

    for (const auto& mv : moves) {
        if (mv.kind != Move::Kind::absorb_path) continue;
        auto next = apply_move(p, mv);
        CHECK(next.cycle.vertices.size() == 6);  // grew by the path length
        CHECK(next.path.vertices.empty());
        REQUIRE_FALSE(validate_pair(next).has_value());
    }
}

TEST_CASE("cover-improving edge swap") {
    UniformHypergraph h{
        6, 3, {{0, 1, 5}, {1, 2, 4}, {0, 2, 5}, {0, 1, 3}}};
    auto p = make_pair(h, {0, 1, 2}, {0, 1, 2}, {3}, {});
    REQUIRE_FALSE(validate_pair(p).has_value());
    auto moves = applicable_moves(p);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].kind == Move::Kind::swap_cover_edge);
    CHECK(moves[0].edge_a == 3);
    CHECK(moves[0].cycle_pos == 0);
    auto next = apply_move(p, moves[0]);
    auto r = pair_rank(next);
    CHECK(r.c_len == 3);
    CHECK(r.cover_c == 1);
}

TEST_CASE("path closure replaces a shorter cycle") {
    UniformHypergraph h{8,
                        3,
                        {{0, 5, 6},
                         {0, 6, 7},
                         {0, 5, 7},
                         {0, 1, 4},
                         {1, 2, 4},
                         {2, 3, 4},
                         {0, 3, 4}}};
    auto p = make_pair(h, {5, 6, 7}, {0, 1, 2}, {0, 1, 2, 3}, {3, 4, 5});
    REQUIRE_FALSE(validate_pair(p).has_value());
    auto moves = applicable_moves(p);
    int closes = count_kind(moves, Move::Kind::close_cycle);
    REQUIRE(closes >= 1);
    for (const auto& mv : moves) {
        if (mv.kind != Move::Kind::close_cycle) continue;
        auto next = apply_move(p, mv);
        CHECK(next.cycle.vertices.size() == 4);
        CHECK(next.cycle.vertices == std::vector<int>{0, 1, 2, 3});
        REQUIRE_FALSE(validate_pair(next).has_value());
        CHECK_FALSE(next.path.vertices.empty());  // reseeded off-cycle
    }
}

TEST_CASE("rotation preludes unlock an extension") {
    UniformHypergraph h{10,
                        3,
                        {{4, 5, 7},
                         {5, 6, 7},
                         {4, 6, 7},
                         {0, 1, 9},
                         {0, 1, 2},
                         {1, 3, 8}}};
    auto p = make_pair(h, {4, 5, 6}, {0, 1, 2}, {0, 1, 2}, {3, 4});
    REQUIRE_FALSE(validate_pair(p).has_value());
    auto moves = applicable_moves(p);
    REQUIRE(moves.size() == 2);
    for (const auto& mv : moves) {
        CHECK(mv.kind == Move::Kind::extend_path);
        REQUIRE(mv.prelude.size() == 1);
        CHECK(mv.prelude[0].kind == Move::Kind::rotate_path);
        auto next = apply_move(p, mv);
        CHECK(next.path.vertices.size() == 4);
        CHECK(next.path.vertices[1] == 1);  // rotated front before extending
        REQUIRE_FALSE(validate_pair(next).has_value());
    }
}

TEST_CASE("a spanning pair admits no move") {
    auto h = gen_tight_cycle(6, 3);
    auto p = make_pair(h, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}, {}, {});
    REQUIRE_FALSE(validate_pair(p).has_value());
    CHECK(applicable_moves(p).empty());
}

TEST_CASE("every enumerated move improves the rank when applied") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto h = gen_random_min_degree(8, 3, 5, 900 + seed);
        auto run = engine_run(h, 8, 40, true);
        for (const auto& step : run.trace) {
            CHECK(step.after > step.before);
            CHECK(step.move.fingerprint != 0);
        }
    }
}

TEST_CASE("run finds spanning cycles on friendly hosts") {
    auto k6 = complete_graph(6, 3);
    auto a = engine_run(k6, 6);
    REQUIRE(a.status == RunResult::Status::found);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->vertices.size() >= 6);
    CHECK_FALSE(validate_walk(k6, *a.witness).has_value());

    auto t7 = gen_tight_cycle(7, 3);
    auto b = engine_run(t7, 7);
    REQUIRE(b.status == RunResult::Status::found);
    CHECK_FALSE(validate_walk(t7, *b.witness).has_value());
}

TEST_CASE("run reports stuck honestly on an extremal host") {
    auto h = gen_h1(9, 3);
    auto res = engine_run(h, 9);
    REQUIRE(res.status == RunResult::Status::stuck);
    CHECK_FALSE(res.witness.has_value());
    REQUIRE(res.pair.has_value());
    CHECK_FALSE(validate_pair(*res.pair).has_value());
    CHECK_FALSE(res.max_steps_exceeded);
    // the exact solver agrees nothing spanning exists
    CHECK(find_berge_cycle(h, 9).verdict == SolveOutcome::Verdict::exhausted);
}

TEST_CASE("step budget is honoured and flagged") {
    // bootstrap closes [4,0,1,2] and strands vertex 3; an endpoint insert
    // through {0,3,4} finishes the spanning cycle one step later
    UniformHypergraph h{5,
                        3,
                        {{0, 3, 4},
                         {0, 1, 2},
                         {1, 2, 3},
                         {0, 2, 3},
                         {1, 2, 4},
                         {0, 1, 3}}};
    auto res = engine_run(h, 5, 0);
    CHECK(res.status == RunResult::Status::stuck);
    CHECK(res.max_steps_exceeded);
    CHECK(res.steps == 0);
    REQUIRE(res.pair.has_value());
    CHECK(res.pair->cycle.vertices.size() == 4);

    auto full = engine_run(h, 5);
    CHECK(full.status == RunResult::Status::found);
    CHECK_FALSE(full.max_steps_exceeded);
    CHECK(full.steps == 1);
    REQUIRE(full.witness.has_value());
    CHECK_FALSE(validate_walk(h, *full.witness).has_value());
    CHECK(full.witness->vertices.size() == 5);
}

TEST_CASE("runs are deterministic") {
    auto h = gen_random_min_degree(8, 3, 7, 3);
    auto a = engine_run(h, 8);
    auto b = engine_run(h, 8);
    CHECK(a.status == b.status);
    CHECK(a.steps == b.steps);
    CHECK(a.witness == b.witness);
}

TEST_CASE("run rejects an unreachable target") {
    auto h = gen_tight_cycle(6, 3);
    CHECK_THROWS_AS(engine_run(h, 7), std::invalid_argument);
    CHECK_THROWS_AS(engine_run(h, 2), std::invalid_argument);
}
