#include "recomb/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

#include "recomb/bgp.hpp"
#include "recomb/check.hpp"
#include "recomb/csv.hpp"
#include "recomb/dynamics.hpp"
#include "recomb/parallel.hpp"
#include "recomb/rootfind.hpp"
#include "recomb/statics.hpp"

namespace recomb {

namespace {

void report_error(const char* kind, const std::string& message) {
    std::string one_line = message;
    for (char& c : one_line) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    std::fprintf(stderr, "error kind=%s message=%s\n", kind, one_line.c_str());
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.output_dir) / name).string();
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
    const std::string path = out_path(cfg, name);
    csv::write_file(path, content);
    std::printf("wrote %s\n", path.c_str());
}

BgpSolveOptions solve_options(const RunConfig& cfg) {
    BgpSolveOptions opt;
    opt.tol = cfg.bgp_tol;
    opt.a2_threshold = cfg.a2_threshold;
    return opt;
}

int run_solve(const RunConfig& cfg) {
    const BgpSolution sol = solve_bgp(cfg.params, solve_options(cfg));
    emit(cfg, "bgp.csv", csv::bgp_csv(cfg, sol));
    return kExitOk;
}

int run_simulate(const RunConfig& cfg) {
    const PriceScenario& scenario = *cfg.scenario;
    const BgpSolution sol = solve_bgp(cfg.params, solve_options(cfg));
    const EconomyState init = bgp_initial_state(cfg.params, sol, scenario);
    const ScenarioPath path =
        simulate(init, scenario, cfg.horizon, cfg.params, cfg.sim_tol);
    const std::string name = std::string("path_") + to_string(scenario.kind) + ".csv";
    emit(cfg, name, csv::path_csv(cfg, path));
    return kExitOk;
}

int run_sweep(const RunConfig& cfg) {
    const SweepSpec& spec = *cfg.sweep;
    const SweepResult result =
        sweep(cfg.params, spec.param, spec.lo, spec.hi, spec.steps, solve_options(cfg));
    const std::string name =
        std::string("sweep_") + (spec.param == SweepParam::Alpha ? "alpha" : "m") + ".csv";
    emit(cfg, name, csv::sweep_csv(cfg, result));
    return kExitOk;
}

int run_check(const RunConfig& cfg) {
    const check::CheckSuiteResult result = check::run_check_suite(cfg.params, cfg.seed);
    emit(cfg, "check_report.csv", csv::check_csv(cfg, result));
    int failed = 0;
    for (const check::CheckRow& row : result.rows) {
        if (!row.passed) {
            ++failed;
            std::printf("check failed: %s (%s)\n", row.name.c_str(), row.detail.c_str());
        }
    }
    std::printf("checks passed: %zu/%zu\n", result.rows.size() - failed,
                result.rows.size());
    return result.all_passed ? kExitOk : kExitChecks;
}

}  // namespace

int run(const RunConfig& cfg) {
    par::configure_threads_from_env();
    try {
        switch (cfg.command) {
            case Command::SolveBgp: return run_solve(cfg);
            case Command::Simulate: return run_simulate(cfg);
            case Command::Sweep: return run_sweep(cfg);
            case Command::Check: return run_check(cfg);
        }
        report_error("config", "unreachable command value");
        return kExitConfig;
    } catch (const ConfigError& e) {
        report_error("config", e.what());
        return kExitConfig;
    } catch (const csv::IoError& e) {
        report_error("io", e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        report_error("io", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        // NoEntryError, NoInteriorOptimumError, NonConvergenceError and the
        // domain/argument guards all land here: the model, not the plumbing.
        report_error("solver", e.what());
        return kExitSolver;
    }
}

}  // namespace recomb
