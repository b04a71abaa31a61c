// Command-line front end: construction generators, exact solver, local-search
// engine, lemma suites, threshold formulas, and theorem-verification sweeps.
// Machine-readable JSON on stdout (pretty with --human); exit 0 on
// success/pass, 1 on findings or violations, 2 on usage or input errors.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berge/constructions.hpp"
#include "berge/engine.hpp"
#include "berge/hypergraph.hpp"
#include "berge/json_io.hpp"
#include "berge/lemma_lab.hpp"
#include "berge/solver.hpp"
#include "berge/thresholds.hpp"
#include "berge/verify.hpp"

namespace {

using berge::json;

struct Common {
    std::string input, output;
    uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
    bool deterministic = false;
    bool human = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input", c.input, "input .bhg path ('-' for stdin)");
    cmd->add_option("--output", c.output, "output path");
    cmd->add_option("--seed", c.seed, "seed (u64)")->each([&](const std::string&) {
        c.seed_set = true;
    });
    cmd->add_option("--jobs", c.jobs, "worker count");
    cmd->add_flag("--deterministic", c.deterministic,
                  "exclude wall-clock fields from output");
    cmd->add_flag("--human", c.human, "pretty-print JSON");
}

void emit(const json& j, const Common& c) {
    if (c.human)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int fail_input(const std::string& msg, const Common& c) {
    emit(json{{"error", msg}}, c);
    return 2;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

berge::UniformHypergraph load_input(const Common& c) {
    if (c.input.empty())
        throw std::runtime_error("--input is required");
    std::string text;
    if (c.input == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream f(c.input);
        if (!f) throw std::runtime_error("cannot open " + c.input);
        text = read_all(f);
    }
    return berge::parse_bhg(text);
}

struct GenArgs {
    std::string family;
    int n = 0, r = 0, k = 0;
    long long delta = -1;
    std::string meta_path;
};

json gen_metadata(const GenArgs& a, const berge::UniformHypergraph& h,
                  const Common& c) {
    json meta;
    meta["family"] = a.family;
    meta["n"] = h.n;
    meta["r"] = h.r;
    meta["edges"] = (long long)h.edges.size();
    long long t = berge::t_of(h.n);
    if (a.family == "h1" || a.family == "h2") {
        meta["expected_delta"] = berge::binomial(t, h.r - 1);
        meta["no_hamiltonian_cycle"] = true;
        if (a.family == "h1" && h.r == 3)
            meta["expected_circumference"] = (h.n + 1) / 2;
    } else if (a.family == "h3") {
        meta["expected_delta"] = (long long)h.r - 1;
        meta["no_hamiltonian_cycle"] = true;
    } else if (a.family == "h4") {
        meta["k"] = a.k;
        meta["expected_delta"] = berge::binomial(a.k - 2, h.r - 1);
        meta["expected_circumference"] = a.k - 1;
    } else if (a.family == "h5") {
        meta["k"] = a.k;
        meta["expected_delta"] = (long long)a.k - 2;
        meta["expected_circumference_at_most"] = a.k - 1;
    } else if (a.family == "tight") {
        meta["expected_delta"] = (long long)h.r;
        meta["hamiltonian"] = true;
    } else if (a.family == "random") {
        meta["delta_floor"] = a.delta;
        meta["seed"] = c.seed;
    }
    auto prof = berge::degree_profile(h);
    meta["min_degree"] = prof.min_degree;
    return meta;
}

int cmd_gen(const GenArgs& a, const Common& c) {
    berge::UniformHypergraph h;
    if (a.family == "h1") {
        h = berge::gen_h1(a.n, a.r);
    } else if (a.family == "h2") {
        h = berge::gen_h2(a.n, a.r);
    } else if (a.family == "h3") {
        h = berge::gen_h3(a.n, a.r);
    } else if (a.family == "h4") {
        h = berge::gen_h4(a.n, a.r, a.k);
    } else if (a.family == "h5") {
        h = berge::gen_h5(a.n, a.r, a.k);
    } else if (a.family == "tight") {
        h = berge::gen_tight_cycle(a.n, a.r);
    } else if (a.family == "random") {
        if (a.delta < 0) throw std::runtime_error("random family needs --delta");
        h = berge::gen_random_min_degree(a.n, a.r, a.delta, c.seed);
    } else {
        throw std::runtime_error("unknown family " + a.family);
    }
    std::string bhg = berge::serialize_bhg(h);
    std::string meta_path = a.meta_path;
    if (c.output.empty()) {
        std::cout << bhg;
    } else {
        std::ofstream f(c.output);
        if (!f) throw std::runtime_error("cannot write " + c.output);
        f << bhg;
        if (meta_path.empty()) meta_path = c.output + ".meta.json";
    }
    if (!meta_path.empty()) {
        std::ofstream mf(meta_path);
        if (!mf) throw std::runtime_error("cannot write " + meta_path);
        json meta = gen_metadata(a, h, c);
        mf << (c.human ? meta.dump(2) : meta.dump()) << "\n";
    }
    return 0;
}

struct SolveArgs {
    std::string target = "ham";
    long long node_limit = -1;
    double time_limit = -1;
    uint64_t seed_order = 0;
    bool seed_order_set = false;
};

berge::SearchBudget make_budget(long long nodes, double seconds) {
    berge::SearchBudget b;
    if (nodes >= 0) b.node_limit = nodes;
    if (seconds >= 0) b.time_limit_seconds = seconds;
    return b;
}

int cmd_solve(const SolveArgs& a, const Common& c) {
    auto h = load_input(c);
    auto budget = make_budget(a.node_limit, a.time_limit);
    std::optional<uint64_t> seed_order;
    if (a.seed_order_set) seed_order = a.seed_order;
    json out;
    bool budget_hit = false;
    if (a.target == "circumference") {
        auto res = berge::circumference(h, budget);
        out["length"] = res.length;
        out["length_is_lower_bound"] = res.length_is_lower_bound;
        out["outcome"] = berge::outcome_to_json(res.outcome);
        budget_hit = res.length_is_lower_bound;
    } else {
        int k;
        if (a.target == "ham") {
            k = h.n;
        } else if (a.target.rfind("k=", 0) == 0) {
            k = std::stoi(a.target.substr(2));
        } else {
            throw std::runtime_error("bad --target (ham | k=<int> | circumference)");
        }
        auto res = berge::find_berge_cycle(h, k, budget, seed_order);
        out = berge::outcome_to_json(res);
        out["k"] = k;
        budget_hit = res.verdict == berge::SolveOutcome::Verdict::budget_exceeded;
    }
    emit(out, c);
    return budget_hit ? 1 : 0;
}

struct EngineArgs {
    std::string target = "ham";
    long long max_steps = -1;
    bool trace = false;
};

int cmd_engine(const EngineArgs& a, const Common& c) {
    auto h = load_input(c);
    int k = a.target == "ham" ? h.n : std::stoi(a.target);
    auto res = berge::engine_run(h, k, a.max_steps, a.trace);
    json out = berge::run_result_to_json(res, a.trace);
    out["target"] = k;
    emit(out, c);
    return res.status == berge::RunResult::Status::found ? 0 : 1;
}

struct LemmaArgs {
    int indep_s_max = 10;
    int s_max = 12;
    int q_max = 4;
};

int cmd_lemmas(const LemmaArgs& a, const Common& c) {
    json out;
    long long violations = 0;
    json indep = json::array();
    for (int s = 3; s <= a.indep_s_max; ++s)
        for (int cc = 0; cc <= s; ++cc) {
            auto rep = berge::max_independent_disjoint(s, cc);
            violations += rep.violations;
            indep.push_back(berge::indep_report_to_json(rep));
        }
    out["independent_disjoint"] = std::move(indep);
    json verc = json::array(), verc2 = json::array();
    for (int s = 3; s <= a.s_max; ++s)
        for (int q = 2; q <= a.q_max; ++q) {
            auto r1 = berge::max_verc_config(s, q);
            violations += r1.violations;
            verc.push_back(berge::verc_report_to_json(r1));
            auto r2 = berge::max_verc2_config(s, q);
            violations += r2.violations;
            verc2.push_back(berge::verc2_report_to_json(r2));
        }
    out["separated_edge_configs"] = std::move(verc);
    out["separated_vertex_configs"] = std::move(verc2);
    out["violations"] = violations;
    out["pass"] = violations == 0;
    emit(out, c);
    return violations == 0 ? 0 : 1;
}

struct ThresholdArgs {
    int n = 0, r = 0, k = -1;
    bool half_k = false;
};

int cmd_threshold(const ThresholdArgs& a, const Common& c) {
    berge::ThresholdAnswer ans;
    if (a.half_k) {
        if (a.k < 0) throw std::runtime_error("--half-k needs --k");
        ans = berge::half_k_threshold(a.n, a.r, a.k);
    } else if (a.k < 0) {
        ans = berge::hamiltonian_threshold(a.n, a.r);
    } else {
        ans = berge::circumference_threshold(a.n, a.r, a.k);
    }
    emit(berge::threshold_to_json(ans), c);
    return 0;
}

struct VerifyArgs {
    std::string config;
};

berge::SweepConfig parse_sweep_config(const std::string& path,
                                      const Common& c) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j = json::parse(read_all(f));
    berge::SweepConfig cfg;
    for (const auto& cell : j.at("cells")) {
        berge::CellSpec spec;
        spec.n = cell.at("n").get<int>();
        spec.r = cell.at("r").get<int>();
        spec.k = cell.at("k").get<int>();
        spec.exhaustive = cell.value("exhaustive", false);
        spec.engine = cell.value("engine", true);
        cfg.grid.push_back(spec);
    }
    cfg.samples_per_cell = j.value("samples_per_cell", 100ll);
    cfg.seed = j.value("seed", (uint64_t)0);
    if (j.contains("node_limit"))
        cfg.budget.node_limit = j.at("node_limit").get<long long>();
    if (j.contains("time_limit"))
        cfg.budget.time_limit_seconds = j.at("time_limit").get<double>();
    cfg.jobs = j.value("jobs", 1);
    if (c.seed_set) cfg.seed = c.seed;
    if (c.jobs > 1) cfg.jobs = c.jobs;
    cfg.deterministic = c.deterministic;
    return cfg;
}

int cmd_verify(const VerifyArgs& a, const Common& c) {
    if (a.config.empty()) throw std::runtime_error("--config is required");
    berge::SweepConfig cfg = parse_sweep_config(a.config, c);
    std::vector<std::string> prev_lines;
    if (!c.output.empty()) {
        std::ifstream f(c.output);
        if (f) {
            std::string line;
            while (std::getline(f, line))
                if (!line.empty()) prev_lines.push_back(line);
            if (!f.eof() && f.bad())
                throw std::runtime_error("cannot read " + c.output);
        }
    }
    long long resume = (long long)prev_lines.size();
    if (resume > 0)
        std::cerr << "resuming after " << resume << " persisted records\n";
    auto run = berge::run_sweep(cfg, resume, &std::cerr);
    std::vector<json> all_records;
    for (const auto& line : prev_lines) all_records.push_back(json::parse(line));
    for (const auto& rec : run.new_records) all_records.push_back(rec);
    if (!c.output.empty()) {
        std::ofstream f(c.output, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + c.output);
        for (const auto& rec : all_records) f << rec.dump() << "\n";
    }
    bool pass = false;
    json report = berge::build_report(cfg, run, all_records, &pass);
    if (!cfg.deterministic) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        report["generated_at"] = buf;
    }
    emit(report, c);
    return pass ? 0 : 1;
}

int cmd_bench(const Common& c) {
    json out = json::array();
    auto one = [&](const std::string& name, const berge::UniformHypergraph& h,
                   int k) {
        auto t0 = std::chrono::steady_clock::now();
        auto res = berge::find_berge_cycle(h, k);
        auto t1 = std::chrono::steady_clock::now();
        json j{{"case", name},
               {"n", h.n},
               {"r", h.r},
               {"edges", (long long)h.edges.size()},
               {"k", k},
               {"verdict", berge::verdict_name(res.verdict)},
               {"nodes", res.nodes_explored}};
        if (!c.deterministic)
            j["ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.push_back(std::move(j));
    };
    for (int n = 8; n <= 10; ++n)
        one("tight_" + std::to_string(n), berge::gen_tight_cycle(n, 3), n);
    for (int n = 7; n <= 9; ++n)
        one("h1_" + std::to_string(n), berge::gen_h1(n, 3), n);
    one("random_9", berge::gen_random_min_degree(9, 3, 6, 42), 9);
    emit(out, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge cycle toolkit: generators, exact solver, local-search "
                 "engine, lemma suites, thresholds, verification sweeps"};
    app.require_subcommand(1);

    Common common;
    GenArgs gen_args;
    SolveArgs solve_args;
    EngineArgs engine_args;
    LemmaArgs lemma_args;
    ThresholdArgs thr_args;
    VerifyArgs verify_args;

    auto* gen = app.add_subcommand("gen", "emit a construction as .bhg");
    add_common(gen, common);
    gen->add_option("--family", gen_args.family,
                    "h1|h2|h3|h4|h5|tight|random")->required();
    gen->add_option("--n", gen_args.n, "vertex count")->required();
    gen->add_option("--r", gen_args.r, "edge size")->required();
    gen->add_option("--k", gen_args.k, "target length (h4, h5)");
    gen->add_option("--delta", gen_args.delta, "degree floor (random)");
    gen->add_option("--meta", gen_args.meta_path, "metadata sidecar path");

    auto* solve = app.add_subcommand("solve", "exact Berge cycle search");
    add_common(solve, common);
    solve->add_option("--target", solve_args.target,
                      "ham | k=<int> | circumference");
    solve->add_option("--node-limit", solve_args.node_limit, "search node cap");
    solve->add_option("--time-limit", solve_args.time_limit, "seconds cap");
    solve->add_option("--seed-order", solve_args.seed_order,
                      "randomize branch order with this seed")
        ->each([&](const std::string&) { solve_args.seed_order_set = true; });

    auto* engine = app.add_subcommand("engine", "local-search engine run");
    add_common(engine, common);
    engine->add_option("--target", engine_args.target, "ham | <int>");
    engine->add_option("--max-steps", engine_args.max_steps, "move cap");
    engine->add_flag("--trace", engine_args.trace, "emit per-move log");

    auto* lemmas = app.add_subcommand("lemmas", "cycle-configuration suites");
    add_common(lemmas, common);
    lemmas->add_option("--indep-s-max", lemma_args.indep_s_max,
                       "max cycle length for the independent-set suite");
    lemmas->add_option("--s-max", lemma_args.s_max,
                       "max cycle length for the separation suites");
    lemmas->add_option("--q-max", lemma_args.q_max, "max separation distance");

    auto* threshold = app.add_subcommand("threshold", "degree threshold lookup");
    add_common(threshold, common);
    threshold->add_option("--n", thr_args.n, "vertex count")->required();
    threshold->add_option("--r", thr_args.r, "edge size")->required();
    threshold->add_option("--k", thr_args.k, "cycle length (omit: hamiltonian)");
    threshold->add_flag("--half-k", thr_args.half_k,
                        "half-length bound (r > t, needs --k)");

    auto* verify = app.add_subcommand("verify", "theorem verification sweep");
    add_common(verify, common);
    verify->add_option("--config", verify_args.config, "sweep config JSON")
        ->required();

    auto* bench = app.add_subcommand("bench", "solver micro-benchmarks");
    add_common(bench, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args, common);
        if (solve->parsed()) return cmd_solve(solve_args, common);
        if (engine->parsed()) return cmd_engine(engine_args, common);
        if (lemmas->parsed()) return cmd_lemmas(lemma_args, common);
        if (threshold->parsed()) return cmd_threshold(thr_args, common);
        if (verify->parsed()) return cmd_verify(verify_args, common);
        if (bench->parsed()) return cmd_bench(common);
    } catch (const berge::BhgError& e) {
        return fail_input(std::string("malformed input: ") + e.what(), common);
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what(), common);
    } catch (const std::runtime_error& e) {
        return fail_input(e.what(), common);
    }
    return 2;
}
