#pragma once

#include <bit>
#include <cstdlib>
#include <ctime>
#include <map>
#include <string>
#include <vector>

#include "aqb/io.hpp"
#include "aqb/zoo.hpp"

namespace aqb::cli {

using io::json;

// ---------------------------------------------------------------------------
// Configuration

struct ProblemSpec {
    std::string name; // dj-das | dj-wei | bv | grover | ising | kclique
    int n = 3;
    int k = 3;
    bool has_constant = false;
    int constant_bit = 0;
    int balanced_variant = 0;
    std::string secret;          // bitstring, rightmost char = qubit 0
    std::vector<std::uint64_t> marked;
    int marked_count = 1;        // used when --marked is absent
    bool projector_form = false;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string graph_file;
    bool deformed = false;
};

struct RunConfig {
    std::string command;
    ProblemSpec prob;
    double epsilon = 0.1;
    bool has_lambda_bar = false;
    double lambda_bar = 0.0;
    std::string schedule = "linear";
    double T = 5.0;
    int steps = 0;       // 0 = heuristic
    int samples = 201;
    int grid = 101;
    std::vector<int> scan_ns;
    bool has_c1 = false;
    double c1 = 0.0;
    int trials = 0;
    int jobs = 1;
    bool no_timestamp = false;
    bool inject_fault = false;
    std::string output_path; // JSON destination; empty = stdout
    std::string csv_path;    // auxiliary CSV; empty = per-command default
    std::string verify_suite;
};

struct CliResult {
    int exit_code = 0;
    json out;
    std::map<std::string, std::string> files; // path -> content
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAsymptoticInvalid = 2;
inline constexpr int kExitPropertyViolation = 3;
inline constexpr int kExitUsage = 64;

// ---------------------------------------------------------------------------
// Builders

inline dynamics::ScheduleShape parse_schedule(const std::string& spec) {
    if (spec == "linear") return dynamics::ScheduleShape::linear();
    auto starts = [&](const char* pre) { return spec.rfind(pre, 0) == 0; };
    if (starts("pow:") || starts("power:")) {
        try {
            return dynamics::ScheduleShape::power(std::stod(spec.substr(spec.find(':') + 1)));
        } catch (const std::logic_error&) {
            throw parse_error("schedule: bad exponent in '" + spec + "'");
        }
    }
    if (starts("table:")) {
        std::vector<std::pair<double, double>> nodes;
        std::string body = spec.substr(6);
        std::vector<double> vals;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            try {
                vals.push_back(std::stod(tok));
            } catch (const std::logic_error&) {
                throw parse_error("schedule: bad table value '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (vals.size() < 2) throw parse_error("schedule: table needs >= 2 values");
        for (std::size_t i = 0; i < vals.size(); ++i)
            nodes.emplace_back(double(i) / (vals.size() - 1), vals[i]);
        return dynamics::ScheduleShape::table(std::move(nodes));
    }
    throw parse_error("schedule: expected linear, pow:<q> or table:<f0,...,1>, got '" + spec + "'");
}

inline zoo::BooleanFunctionSpec dj_function(const ProblemSpec& ps) {
    if (ps.has_constant) return zoo::BooleanFunctionSpec::constant(ps.constant_bit);
    return zoo::BooleanFunctionSpec::balanced(ps.balanced_variant);
}

inline std::uint64_t parse_secret(const std::string& s, int n) {
    if (s.empty()) return (std::uint64_t{1} << n) - 1; // default: all-ones
    if (static_cast<int>(s.size()) != n)
        throw parse_error("secret: expected " + std::to_string(n) + " binary digits");
    std::uint64_t mask = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw parse_error("secret: only '0'/'1' digits allowed");
        mask = (mask << 1) | std::uint64_t(c - '0');
    }
    return mask;
}

inline graphs::Graph load_graph(const ProblemSpec& ps) {
    if (!ps.graph_file.empty()) {
        std::FILE* f = std::fopen(ps.graph_file.c_str(), "rb");
        if (!f) throw parse_error("cannot open graph file '" + ps.graph_file + "'");
        std::string text;
        char buf[4096];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, got);
        std::fclose(f);
        return graphs::load_edge_list(text);
    }
    return graphs::random_graph(ps.n, ps.p, ps.seed);
}

inline Problem build_problem(const ProblemSpec& ps) {
    if (ps.name == "dj-das") return zoo::dj_das(ps.n, dj_function(ps));
    if (ps.name == "dj-wei") return zoo::dj_wei(ps.n, dj_function(ps));
    if (ps.name == "bv") return zoo::bernstein_vazirani(ps.n, parse_secret(ps.secret, ps.n));
    if (ps.name == "grover") {
        // --n counts database items; the register holds log2(n) qubits.
        auto items = static_cast<std::uint64_t>(ps.n);
        if (ps.n < 2 || !std::has_single_bit(items))
            throw invalid_argument(
                "grover: --n is the number of database items and must be a power of two >= 2");
        std::vector<std::uint64_t> marked = ps.marked;
        if (marked.empty())
            for (int i = 0; i < ps.marked_count; ++i) marked.push_back(i);
        return zoo::grover(std::countr_zero(items), marked, ps.projector_form);
    }
    if (ps.name == "ising") return zoo::ising_counterexample(ps.n);
    if (ps.name == "kclique") return zoo::kclique(load_graph(ps), ps.k, ps.deformed);
    throw invalid_argument("unknown problem '" + ps.name +
                           "' (expected dj-das, dj-wei, bv, grover, ising or kclique)");
}

// Size-parameterized family for scans. Clique instances are graph-specific,
// so they are excluded here.
inline std::function<Problem(int)> problem_family(const ProblemSpec& ps) {
    if (ps.name == "kclique")
        throw invalid_argument("scan: kclique is instance-specific; supported families are "
                               "dj-das, dj-wei, bv, grover, ising");
    return [ps](int n) {
        ProblemSpec copy = ps;
        copy.n = n;
        copy.secret.clear(); // bv: all-ones secret of the right width
        if (copy.name == "grover") copy.marked.clear(); // first marked_count labels
        return build_problem(copy);
    };
}

// ---------------------------------------------------------------------------
// Output envelope

inline json config_json(const RunConfig& cfg) {
    json prob = {{"name", cfg.prob.name},
                 {"n", cfg.prob.n},
                 {"k", cfg.prob.k},
                 {"constant", cfg.prob.has_constant ? json(cfg.prob.constant_bit) : json(nullptr)},
                 {"balancedVariant", cfg.prob.balanced_variant},
                 {"secret", cfg.prob.secret},
                 {"marked", cfg.prob.marked},
                 {"markedCount", cfg.prob.marked_count},
                 {"projectorForm", cfg.prob.projector_form},
                 {"p", cfg.prob.p},
                 {"seed", cfg.prob.seed},
                 {"graphFile", cfg.prob.graph_file},
                 {"deformed", cfg.prob.deformed}};
    return {{"command", cfg.command},
            {"problem", std::move(prob)},
            {"epsilon", cfg.epsilon},
            {"lambdaBar", cfg.has_lambda_bar ? json(cfg.lambda_bar) : json(nullptr)},
            {"schedule", cfg.schedule},
            {"T", cfg.T},
            {"steps", cfg.steps},
            {"samples", cfg.samples},
            {"grid", cfg.grid},
            {"scan", cfg.scan_ns},
            {"c1", cfg.has_c1 ? json(cfg.c1) : json(nullptr)},
            {"trials", cfg.trials},
            {"jobs", cfg.jobs},
            {"verifySuite", cfg.verify_suite},
            {"injectFault", cfg.inject_fault}};
}

inline std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline json envelope(const RunConfig& cfg) {
    json j;
    j["version"] = kVersion;
    j["prng"] = kPrngId;
    j["config"] = config_json(cfg);
    if (!cfg.no_timestamp) j["timestamp"] = iso_timestamp();
    return j;
}

inline double effective_lambda_bar(const RunConfig& cfg) {
    if (cfg.has_lambda_bar) return cfg.lambda_bar;
    return parse_schedule(cfg.schedule).average();
}

// ---------------------------------------------------------------------------
// Subcommands

inline CliResult run_bound(const RunConfig& cfg) {
    CliResult res;
    res.out = envelope(cfg);
    if (!cfg.scan_ns.empty()) {
        auto scan = bounds::asymptotic_scan(problem_family(cfg.prob), cfg.scan_ns);
        res.out["result"] = io::scan_json(scan);
        res.files[cfg.csv_path.empty() ? "scan.csv" : cfg.csv_path] = io::scan_csv(scan);
        res.exit_code = scan.asymptoticClass == bounds::AsymptoticClass::AsymptoticallyInvalid
                            ? kExitAsymptoticInvalid
                            : kExitOk;
        return res;
    }
    Problem p = build_problem(cfg.prob);
    std::optional<double> c1;
    if (cfg.has_c1) c1 = cfg.c1;
    auto rep = bounds::compute_bound(p, cfg.epsilon, effective_lambda_bar(cfg), c1);
    res.out["result"] = io::bound_report_json(rep);
    res.out["result"]["moments"] = io::moments_json(bounds::moments_check(p));
    return res;
}

inline CliResult run_simulate(const RunConfig& cfg) {
    CliResult res;
    res.out = envelope(cfg);
    Problem p = build_problem(cfg.prob);
    dynamics::Schedule sched(parse_schedule(cfg.schedule), cfg.T);
    int samples = cfg.inject_fault ? std::max(cfg.samples, 3) : cfg.samples;
    auto traj = dynamics::integrate(p, sched, cfg.steps, samples);

    if (cfg.inject_fault) {
        // self-test: corrupt an early sample (theta is still tiny there, so a
        // 0.2 fidelity shift must break |F - C| <= sin(theta)) and prove the
        // chain checker trips
        auto corrupted = traj;
        auto& victim = corrupted.samples[1];
        victim.fidelity = std::max(0.0, victim.fidelity - 0.2);
        dynamics::verify_chain(corrupted);
        throw numeric_error("inject-fault: corrupted trajectory passed the chain check");
    }

    auto chain = dynamics::verify_chain(traj);
    auto rt = dynamics::check_runtime_bound(p, traj, cfg.epsilon);
    if (rt.applicable && !rt.holds)
        throw property_violation("runtime bound violated: T = " + num::fmt17(traj.T) +
                                 " < tLower = " + num::fmt17(rt.tLower));
    res.out["result"] = {{"trajectory", io::trajectory_summary_json(traj)},
                         {"chain", io::chain_report_json(chain)},
                         {"runtimeCheck", io::runtime_check_json(rt)}};
    res.files[cfg.csv_path.empty() ? "trajectory.csv" : cfg.csv_path] = io::trajectory_csv(traj);
    return res;
}

inline CliResult run_gap(const RunConfig& cfg) {
    CliResult res;
    res.out = envelope(cfg);
    Problem p = build_problem(cfg.prob);
    auto prof = gap::sweep(p, cfg.grid, cfg.jobs);
    auto check = gap::projector_case_check(p, prof);
    res.out["result"] = {{"profile", io::gap_profile_json(prof)},
                         {"projectorCase", io::projector_check_json(check)}};
    if (cfg.has_c1 || p.phi1) {
        std::optional<double> c1;
        if (cfg.has_c1) c1 = cfg.c1;
        auto rep = bounds::compute_bound(p, cfg.epsilon, effective_lambda_bar(cfg), c1);
        auto cmp = gap::compare_bounds(p, prof, rep);
        res.out["result"]["bound"] = io::bound_report_json(rep);
        res.out["result"]["comparison"] = io::comparison_json(cmp);
    } else {
        res.out["result"]["comparison"] = nullptr;
    }
    res.files[cfg.csv_path.empty() ? "gap.csv" : cfg.csv_path] = io::gap_csv(prof);
    return res;
}

inline CliResult run_kclique(const RunConfig& cfg) {
    CliResult res;
    res.out = envelope(cfg);
    const auto& ps = cfg.prob;
    int n = ps.n;
    json result;

    if (!ps.graph_file.empty() || cfg.trials == 0) {
        graphs::Graph g = load_graph(ps);
        n = g.n();
        auto rep = bounds::kclique_instance_bound(g, ps.k, ps.deformed, cfg.epsilon,
                                                  effective_lambda_bar(cfg));
        std::uint64_t m = graphs::count_kcliques(g, ps.k);
        result["instance"] = io::bound_report_json(rep);
        result["instance"]["cliqueCount"] = m;
        result["instance"]["labels"] = num::binom(n, ps.k);
        result["instance"]["edges"] = g.edge_count();
    }
    result["meanfield"] = io::random_clique_json(bounds::kclique_meanfield(n, ps.k, ps.p));
    result["combinatorial"] =
        io::random_clique_json(bounds::kclique_combinatorial(n, ps.k, ps.p));
    if (cfg.trials > 0 && ps.graph_file.empty())
        result["montecarlo"] = io::montecarlo_json(
            bounds::kclique_montecarlo(n, ps.k, ps.p, ps.seed, cfg.trials, cfg.jobs));
    res.out["result"] = std::move(result);
    return res;
}

// ---------------------------------------------------------------------------
// Canned verification suites

namespace detail {

struct SuiteRecorder {
    json checks = json::array();
    bool all_ok = true;

    void record(const std::string& name, bool ok, const std::string& detail = "") {
        json c = {{"name", name}, {"pass", ok}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        if (!ok) all_ok = false;
    }
};

inline void verify_chain_suite(SuiteRecorder& rec) {
    std::vector<Problem> probs;
    probs.push_back(zoo::dj_wei(3, zoo::BooleanFunctionSpec::balanced(0)));
    probs.push_back(zoo::grover(3, {5}));
    probs.push_back(zoo::kclique(graphs::random_graph(5, 0.5, 1), 3, true));
    std::vector<dynamics::ScheduleShape> shapes = {dynamics::ScheduleShape::linear(),
                                                   dynamics::ScheduleShape::power(2.0)};
    for (const auto& p : probs)
        for (const auto& shape : shapes)
            for (double T : {0.5, 5.0}) {
                std::string tag =
                    p.name + "/" + shape.describe() + "/T=" + num::fmt17(T);
                try {
                    auto traj = dynamics::integrate(p, dynamics::Schedule(shape, T), 0, 101);
                    dynamics::verify_chain(traj);
                    bool ok = true;
                    for (double eps : {0.1, 0.25}) {
                        auto rt = dynamics::check_runtime_bound(p, traj, eps);
                        ok = ok && (!rt.applicable || rt.holds);
                    }
                    rec.record("chain " + tag, ok);
                } catch (const error& e) {
                    rec.record("chain " + tag, false, e.what());
                }
            }
}

inline void verify_moments_suite(SuiteRecorder& rec) {
    auto expect = [&](const std::string& name, const Problem& p, bool want) {
        auto c = bounds::moments_check(p);
        rec.record("moments " + name + (want ? " holds" : " fails as expected"),
                   c.holds == want, "residual = " + num::fmt17(c.residual));
    };
    expect("dj_das", zoo::dj_das(4, zoo::BooleanFunctionSpec::constant(0)), true);
    expect("dj_wei", zoo::dj_wei(4, zoo::BooleanFunctionSpec::balanced(1)), true);
    expect("bv", zoo::bernstein_vazirani(4, 0b1011), true);
    expect("grover", zoo::grover(4, {3, 7}), true);
    // raw clique cost has spread >= 2 on a sparse enough graph
    graphs::Graph g = graphs::random_graph(6, 0.4, 3);
    expect("kclique raw", zoo::kclique(g, 3, false), false);
    expect("kclique deformed", zoo::kclique(g, 3, true), true);
}

inline void verify_sm5_suite(SuiteRecorder& rec) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {8, 4}, {10, 5}})
        for (double p : {0.25, 0.5, 0.75}) {
            auto mf = bounds::kclique_meanfield(n, k, p);
            auto cb = bounds::kclique_combinatorial(n, k, p);
            bool ok = num::close_abs(mf.eH, cb.eH, 1e-12) && num::close_abs(mf.eH2, cb.eH2, 1e-12);
            auto mult = bounds::kclique_multiplicities(n, k, p);
            double sum = 0.0;
            for (double m : mult) sum += m;
            ok = ok && num::close_rel(sum, double(num::binom(n, k)), 1e-9);
            rec.record("ensemble moments n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " p=" + num::fmt17(p),
                       ok);
        }
}

} // namespace detail

inline CliResult run_verify(const RunConfig& cfg) {
    CliResult res;
    res.out = envelope(cfg);
    detail::SuiteRecorder rec;
    if (cfg.verify_suite == "chain") detail::verify_chain_suite(rec);
    else if (cfg.verify_suite == "moments") detail::verify_moments_suite(rec);
    else if (cfg.verify_suite == "sm5") detail::verify_sm5_suite(rec);
    else if (cfg.verify_suite == "all") {
        detail::verify_chain_suite(rec);
        detail::verify_moments_suite(rec);
        detail::verify_sm5_suite(rec);
    } else {
        throw invalid_argument("verify: unknown suite '" + cfg.verify_suite +
                               "' (expected chain, moments, sm5 or all)");
    }
    res.out["result"] = {{"checks", rec.checks}, {"pass", rec.all_ok}};
    res.exit_code = rec.all_ok ? kExitOk : kExitPropertyViolation;
    return res;
}

// ---------------------------------------------------------------------------
// Dispatch with exit-code mapping

inline CliResult dispatch(const RunConfig& cfg) {
    try {
        if (cfg.command == "bound") return run_bound(cfg);
        if (cfg.command == "simulate") return run_simulate(cfg);
        if (cfg.command == "gap") return run_gap(cfg);
        if (cfg.command == "kclique") return run_kclique(cfg);
        if (cfg.command == "verify") return run_verify(cfg);
        throw invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const property_violation& e) {
        CliResult res;
        res.exit_code = kExitPropertyViolation;
        res.out = envelope(cfg);
        res.out["error"] = {{"type", "property_violation"}, {"message", e.what()}};
        return res;
    } catch (const parse_error& e) {
        CliResult res;
        res.exit_code = kExitUsage;
        res.out = envelope(cfg);
        res.out["error"] = {{"type", "parse_error"}, {"message", e.what()}};
        return res;
    } catch (const invalid_argument& e) {
        CliResult res;
        res.exit_code = kExitUsage;
        res.out = envelope(cfg);
        res.out["error"] = {{"type", "invalid_argument"}, {"message", e.what()}};
        return res;
    } catch (const error& e) {
        CliResult res;
        res.exit_code = 1;
        res.out = envelope(cfg);
        res.out["error"] = {{"type", "error"}, {"message", e.what()}};
        return res;
    }
}

// Environment override for the seed, applied after argument parsing.
inline void apply_env_seed(RunConfig& cfg) {
    if (const char* env = std::getenv("AQABOUND_SEED")) {
        try {
            cfg.prob.seed = std::stoull(env);
        } catch (const std::logic_error&) {
            throw parse_error("AQABOUND_SEED: not a valid unsigned integer");
        }
    }
}

} // namespace aqb::cli
