// Acceptance gate: one pass/fail line per shipped guarantee, evaluated on the
// default parameterization with fixed seeds. Exits nonzero if any line fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "recomb/check.hpp"
#include "recomb/cli.hpp"
#include "recomb/config.hpp"
#include "recomb/params.hpp"

namespace fs = std::filesystem;
using recomb::check::CheckRow;

namespace {

constexpr std::uint64_t kSuiteSeed = 20250822ULL;
constexpr std::uint64_t kReplaySeed = 987ULL;

const CheckRow* find_row(const std::vector<CheckRow>& rows, const std::string& name) {
    for (const CheckRow& r : rows) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

struct Criterion {
    int id;
    std::string description;
    std::vector<std::string> row_names;
};

std::string read_bytes(const fs::path& p, bool& ok) {
    std::ifstream in(p, std::ios::binary);
    if (!in.good()) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ok = true;
    return ss.str();
}

}  // namespace

int main() {
    const recomb::ModelParams params = recomb::default_params();

    std::printf("running property suite (seed %llu) ...\n",
                static_cast<unsigned long long>(kSuiteSeed));
    std::fflush(stdout);
    const recomb::check::CheckSuiteResult suite =
        recomb::check::run_check_suite(params, kSuiteSeed);

    const std::vector<Criterion> criteria = {
        {1,
         "research distance at the baseline optimum: strictly increasing in AI "
         "productivity on a 20-point grid and single-peaked over the automation share "
         "with the peak within one grid step of the knowledge elasticity, plus a "
         "100,000-point grid cross-check of the closed form; 200 random parameter "
         "sets, exact comparisons",
         {"baseline_distance_m_monotone", "baseline_distance_alpha_peak",
          "baseline_grid_argmax"}},
        {2,
         "full-automation collapse: with the automation share at 1 - 1e-6 the chosen "
         "distance drops below 1e-3 of its value at the interior peak; the collapse "
         "ratio depends only on the knowledge elasticity and crosses 1e-3 near 0.45, "
         "so draws keep that elasticity in [0.10, 0.42] (recorded in the report)",
         {"full_automation_collapse"}},
        {3,
         "equilibrium uniqueness: a 1,000,000-point sign scan of the entry gap finds "
         "exactly one crossing, the solver root lies within one grid step of it with "
         "absolute residual below 1e-10 and feedback determinant above 1; 200 random "
         "parameter sets",
         {"equilibrium_root_unique"}},
        {4,
         "derivative closed forms: all six locus slopes within relative 1e-6 of "
         "central finite differences, and all four equilibrium responses within "
         "relative 1e-3 of re-solve finite differences; 50 random parameter sets each",
         {"locus_slopes_fd", "equilibrium_response_fd"}},
        {5,
         "sign structure: entry always rises with AI productivity, and the distance "
         "response to the automation share is positive below both thresholds and "
         "negative above both; 50 parameter sets per region",
         {"entry_response_m_positive", "alpha_region_signs"}},
        {6,
         "leading-order seed: where the exact optimal distance is below 0.05, the "
         "closed-form seed agrees with it to within 5%",
         {"taylor_seed_agreement"}},
        {7,
         "price scenarios over 200 periods: falling AI prices end with strictly more "
         "entry, shorter distance and lower growth than proportional prices, "
         "fast-rising prices strictly the reverse, and the proportional path drifts "
         "below 1e-6 per period",
         {"scenario_orderings", "proportional_stationarity"}},
        {8,
         "path consistency: every converged period satisfies the research optimality "
         "and free-entry conditions to 1e-9 and the knowledge recursion to relative "
         "1e-12",
         {"path_residuals"}},
    };

    int passed_count = 0;
    int total = 0;
    std::vector<std::string> failure_notes;

    for (const Criterion& c : criteria) {
        ++total;
        bool ok = true;
        for (const std::string& name : c.row_names) {
            const CheckRow* row = find_row(suite.rows, name);
            if (row == nullptr) {
                ok = false;
                failure_notes.push_back("criterion " + std::to_string(c.id) +
                                        ": missing check row '" + name + "'");
                continue;
            }
            if (!row->passed) {
                ok = false;
                failure_notes.push_back("criterion " + std::to_string(c.id) + ": row '" +
                                        name + "' failed, worst margin " +
                                        std::to_string(row->worst_margin) + " (" +
                                        row->detail + ")");
            }
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.description.c_str());
        if (ok) ++passed_count;
    }

    // Determinism: the full check command, run twice with one seed, must emit
    // byte-identical reports.
    ++total;
    bool det_ok = true;
    std::string det_why;
    const fs::path base = fs::current_path() / "acceptance_runs";
    const fs::path dir_a = base / "check_a";
    const fs::path dir_b = base / "check_b";
    std::error_code ec;
    fs::remove_all(base, ec);

    recomb::RunConfig cfg;
    cfg.params = params;
    cfg.command = recomb::Command::Check;
    cfg.seed = kReplaySeed;

    cfg.output_dir = dir_a.string();
    const int code_a = recomb::run(cfg);
    cfg.output_dir = dir_b.string();
    const int code_b = recomb::run(cfg);

    if (code_a != code_b) {
        det_ok = false;
        det_why = "exit codes differ: " + std::to_string(code_a) + " vs " +
                  std::to_string(code_b);
    } else if (code_a != recomb::kExitOk && code_a != recomb::kExitChecks) {
        det_ok = false;
        det_why = "check command failed outright with exit code " + std::to_string(code_a);
    } else {
        bool ok_a = false, ok_b = false;
        const std::string bytes_a = read_bytes(dir_a / "check_report.csv", ok_a);
        const std::string bytes_b = read_bytes(dir_b / "check_report.csv", ok_b);
        if (!ok_a || !ok_b) {
            det_ok = false;
            det_why = "report file missing";
        } else if (bytes_a != bytes_b) {
            det_ok = false;
            det_why = "reports differ (" + std::to_string(bytes_a.size()) + " vs " +
                      std::to_string(bytes_b.size()) + " bytes)";
        } else if (code_a == recomb::kExitChecks) {
            // Identical bytes but a failing suite: determinism holds, yet the
            // run is surfaced through the other criteria; note it here.
            det_why = "reports identical; note: suite reported failures";
        }
    }
    std::printf(
        "[%s] criterion 9: determinism: the check command run twice with the same seed "
        "writes byte-identical report files\n",
        det_ok ? "PASS" : "FAIL");
    if (det_ok) {
        ++passed_count;
    } else {
        failure_notes.push_back("criterion 9: " + det_why);
    }
    if (!det_why.empty() && det_ok) {
        std::printf("    %s\n", det_why.c_str());
    }

    for (const std::string& note : failure_notes) {
        std::printf("    %s\n", note.c_str());
    }
    std::printf("acceptance: %d/%d criteria passed\n", passed_count, total);
    return passed_count == total ? 0 : 1;
}
