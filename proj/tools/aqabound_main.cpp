#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqb/aqb.hpp"

namespace {

// Option pointers whose presence feeds the has_* flags after parsing. The
// same logical option exists once per subcommand, so collect them all and OR
// the counts (only the parsed subcommand can have a nonzero count).
struct OptionSets {
    std::vector<CLI::Option*> constant, lambda_bar, c1;

    static bool any(const std::vector<CLI::Option*>& opts) {
        for (const auto* o : opts)
            if (o->count() > 0) return true;
        return false;
    }
};

void add_problem_options(CLI::App* cmd, aqb::cli::ProblemSpec& ps, OptionSets& sets,
                         bool positional_name) {
    if (positional_name)
        cmd->add_option("problem", ps.name, "problem name (dj-das, dj-wei, bv, grover, ising, kclique)")
            ->required();
    cmd->add_option("--n", ps.n, "register size in qubits, or vertex count");
    cmd->add_option("--k", ps.k, "clique size");
    auto* con = cmd->add_option("--constant", ps.constant_bit, "constant oracle value (0 or 1)");
    cmd->add_option("--balanced", ps.balanced_variant, "balanced oracle variant index")
        ->excludes(con);
    cmd->add_option("--secret", ps.secret, "hidden bitstring (rightmost char = qubit 0)");
    cmd->add_option("--marked", ps.marked, "marked basis labels")->delimiter(',');
    cmd->add_option("--m", ps.marked_count, "number of marked labels when --marked is absent");
    cmd->add_flag("--projector-form", ps.projector_form, "use the rank-1 projector oracle");
    cmd->add_option("--p", ps.p, "edge probability");
    cmd->add_option("--seed", ps.seed, "PRNG seed");
    cmd->add_option("--file", ps.graph_file, "edge list file ('n <edges>' header, one 'u v' pair per line)");
    cmd->add_flag("--deformed", ps.deformed, "clip the clique cost at 1");
    sets.constant.push_back(con);
}

void add_common_options(CLI::App* cmd, aqb::cli::RunConfig& cfg, OptionSets& sets) {
    cmd->add_option("--epsilon", cfg.epsilon, "error budget in (0,1)");
    auto* lb = cmd->add_option("--lambda-bar", cfg.lambda_bar, "override the schedule average");
    cmd->add_option("--schedule", cfg.schedule, "linear, pow:<q> or table:<f0,...,1>");
    cmd->add_option("--jobs", cfg.jobs, "worker threads");
    cmd->add_option("-o,--output", cfg.output_path, "write the JSON report here instead of stdout");
    cmd->add_option("--csv", cfg.csv_path, "override the auxiliary CSV path");
    cmd->add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp for reproducible output");
    sets.lambda_bar.push_back(lb);
}

int emit(const aqb::cli::RunConfig& cfg, const aqb::cli::CliResult& res) {
    std::string text = res.out.dump(2);
    text.push_back('\n');
    if (cfg.output_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::FILE* f = std::fopen(cfg.output_path.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "aqabound: cannot write '%s'\n", cfg.output_path.c_str());
            return 1;
        }
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    for (const auto& [path, content] : res.files) {
        std::FILE* f = std::fopen(path.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "aqabound: cannot write '%s'\n", path.c_str());
            return 1;
        }
        std::fwrite(content.data(), 1, content.size(), f);
        std::fclose(f);
    }
    if (res.out.contains("error"))
        std::fprintf(stderr, "aqabound: %s\n",
                     res.out["error"]["message"].get<std::string>().c_str());
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adiabatic runtime bounds from final-Hamiltonian uncertainty"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(aqb::kVersion));

    aqb::cli::RunConfig cfg;
    OptionSets sets;

    auto* bound = app.add_subcommand("bound", "closed-form runtime lower bound");
    add_problem_options(bound, cfg.prob, sets, true);
    add_common_options(bound, cfg, sets);
    sets.c1.push_back(
        bound->add_option("--c1", cfg.c1, "override the final ground state overlap C(1)"));
    bound->add_option("--scan", cfg.scan_ns, "scan sizes and classify the asymptotics")
        ->delimiter(',');

    auto* sim = app.add_subcommand("simulate", "integrate the evolution and check every inequality");
    add_problem_options(sim, cfg.prob, sets, true);
    add_common_options(sim, cfg, sets);
    sim->add_option("--T", cfg.T, "total runtime")->required();
    sim->add_option("--steps", cfg.steps, "integrator steps (0 = automatic)");
    sim->add_option("--samples", cfg.samples, "recorded trajectory samples");
    sim->add_flag("--inject-fault", cfg.inject_fault,
                  "corrupt one sample to prove the checker trips (exits 3)");

    auto* gapc = app.add_subcommand("gap", "spectral gap profile along the path");
    add_problem_options(gapc, cfg.prob, sets, true);
    add_common_options(gapc, cfg, sets);
    sets.c1.push_back(
        gapc->add_option("--c1", cfg.c1, "override the final ground state overlap C(1)"));
    gapc->add_option("--grid", cfg.grid, "sweep grid points");

    auto* kc = app.add_subcommand("kclique", "clique ensemble moments, exact and sampled");
    add_problem_options(kc, cfg.prob, sets, false);
    add_common_options(kc, cfg, sets);
    kc->add_option("--trials", cfg.trials, "Monte Carlo sample count (0 = skip)");

    auto* ver = app.add_subcommand("verify", "run a canned self-check suite");
    ver->add_option("suite", cfg.verify_suite, "chain, moments, sm5 or all")->required();
    add_common_options(ver, cfg, sets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return aqb::cli::kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "kclique") cfg.prob.name = "kclique";
    cfg.prob.has_constant = OptionSets::any(sets.constant);
    cfg.has_lambda_bar = OptionSets::any(sets.lambda_bar);
    cfg.has_c1 = OptionSets::any(sets.c1);

    try {
        aqb::cli::apply_env_seed(cfg);
    } catch (const aqb::parse_error& e) {
        std::fprintf(stderr, "aqabound: %s\n", e.what());
        return aqb::cli::kExitUsage;
    }

    return emit(cfg, aqb::cli::dispatch(cfg));
}
