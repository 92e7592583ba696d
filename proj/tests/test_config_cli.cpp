#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "recomb/check.hpp"
#include "recomb/cli.hpp"
#include "recomb/config.hpp"
#include "recomb/csv.hpp"
#include "recomb/params.hpp"

using namespace recomb;
namespace fs = std::filesystem;

namespace {

std::string default_param_block() {
    return "alpha = 0.3\n"
           "m = 3.0\n"
           "phi = 0.5\n"
           "kappa = 0.6\n"
           "beta = 0.5\n"
           "eta = 0.6\n"
           "theta = 0.8\n"
           "epsilon = 0.4\n"
           "r = 0.05\n"
           "mu_bar = 1.0\n"
           "l_bar = 1.0\n"
           "r_bar = 1.0\n";
}

std::string error_text(const std::string& text) {
    try {
        parse_config_text(text, "inline");
        return {};
    } catch (const ConfigError& e) {
        return e.what();
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

fs::path fresh_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / "recomb_cli_tests" / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& text, char c = '\n') {
    int n = 0;
    for (char ch : text)
        if (ch == c) ++n;
    return n;
}

}  // namespace

TEST_CASE("minimal config parses to the documented defaults") {
    const RunConfig cfg =
        parse_config_text(default_param_block() + "command = solve_bgp\n", "inline");
    CHECK(cfg.command == Command::SolveBgp);
    CHECK(cfg.params.alpha == 0.3);
    CHECK(cfg.params.m == 3.0);
    CHECK(cfg.params.phi == 0.5);
    CHECK(cfg.params.kappa == 0.6);
    CHECK(cfg.params.beta == 0.5);
    CHECK(cfg.params.eta == 0.6);
    CHECK(cfg.params.theta == 0.8);
    CHECK(cfg.params.epsilon == 0.4);
    CHECK(cfg.params.r == 0.05);
    CHECK(cfg.params.mu_bar == 1.0);
    CHECK(cfg.params.l_bar == 1.0);
    CHECK(cfg.params.r_bar == 1.0);
    CHECK(cfg.horizon == 200);
    CHECK(cfg.seed == 0);
    CHECK(cfg.output_dir == ".");
    CHECK(cfg.bgp_tol == 1e-10);
    CHECK(cfg.sim_tol == 1e-9);
    CHECK(cfg.a2_threshold == kDefaultA2Threshold);
    CHECK_FALSE(cfg.scenario.has_value());
    CHECK_FALSE(cfg.sweep.has_value());
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
    const std::string text = "# full-line comment\n\n  alpha=0.3   # trailing note\n" +
                             default_param_block().substr(std::string("alpha = 0.3\n").size()) +
                             "command = solve_bgp  # run the solver\n\n";
    const RunConfig cfg = parse_config_text(text, "inline");
    CHECK(cfg.params.alpha == 0.3);
    CHECK(cfg.command == Command::SolveBgp);
}

#ifndef RECOMB_TEST_DATA_DIR
#define RECOMB_TEST_DATA_DIR "tests/data"
#endif

TEST_CASE("sample config files on disk match the built-in defaults") {
    const std::string data_dir = RECOMB_TEST_DATA_DIR;
    const RunConfig cfg = load_config(data_dir + "/solve_bgp.cfg");
    const ModelParams d = default_params();
    CHECK(cfg.params.alpha == d.alpha);
    CHECK(cfg.params.m == d.m);
    CHECK(cfg.params.phi == d.phi);
    CHECK(cfg.params.kappa == d.kappa);
    CHECK(cfg.params.beta == d.beta);
    CHECK(cfg.params.eta == d.eta);
    CHECK(cfg.params.theta == d.theta);
    CHECK(cfg.params.epsilon == d.epsilon);
    CHECK(cfg.params.r == d.r);
    CHECK(cfg.params.mu_bar == d.mu_bar);
    CHECK(cfg.params.l_bar == d.l_bar);
    CHECK(cfg.params.r_bar == d.r_bar);
    CHECK(cfg.command == Command::SolveBgp);

    const RunConfig sim = load_config(data_dir + "/simulate_decreasing.cfg");
    REQUIRE(sim.scenario.has_value());
    CHECK(sim.scenario->kind == PriceScenario::Kind::Decreasing);
    CHECK(sim.scenario->rate_param == 0.02);
    CHECK(sim.horizon == 50);

    CHECK_THROWS_AS(load_config(data_dir + "/no_such_file.cfg"), ConfigError);
}

TEST_CASE("parameter-box violations are reported together, with names") {
    const std::string bad = "alpha = 1.0\nm = 0.5\nphi = 0.5\nkappa = 0.6\nbeta = 0.5\n"
                            "eta = 0.6\ntheta = 0.8\nepsilon = 0.4\nr = -0.05\n"
                            "mu_bar = 1.0\nl_bar = 1.0\nr_bar = 1.0\ncommand = solve_bgp\n";
    const std::string msg = error_text(bad);
    CHECK(contains(msg, "alpha"));
    CHECK(contains(msg, "m"));
    CHECK(contains(msg, "r"));
    CHECK(contains(msg, "invalid model parameters"));
}

TEST_CASE("structural errors carry the offending line") {
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nwidget = 1\n"),
                   "unknown key 'widget'"));
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nwidget = 1\n"),
                   ":14:"));
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nalpha = 0.4\n"),
                   "duplicate"));
    CHECK(contains(error_text(default_param_block() + "command = fly\n"), "command must be"));
    CHECK(contains(error_text(default_param_block()), "missing required key 'command'"));
    CHECK(contains(error_text("= 0.3\n" + default_param_block() + "command = solve_bgp\n"),
                   ":1:"));
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nseed = -4\n"),
                   "nonnegative integer"));
    CHECK(contains(error_text(
                       "alpha = zebra\n" +
                       default_param_block().substr(std::string("alpha = 0.3\n").size()) +
                       "command = solve_bgp\n"),
                   "needs a real number"));
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nhorizon = 0\n"),
                   "horizon"));
    CHECK(contains(error_text(default_param_block() + "command = solve_bgp\nbgp_tol = 0\n"),
                   "bgp_tol"));
}

TEST_CASE("simulate command: scenario wiring and defaults") {
    CHECK(contains(error_text(default_param_block() + "command = simulate\n"),
                   "needs a 'scenario' key"));

    RunConfig cfg = parse_config_text(
        default_param_block() + "command = simulate\nscenario = decreasing\n", "inline");
    REQUIRE(cfg.scenario.has_value());
    CHECK(cfg.scenario->kind == PriceScenario::Kind::Decreasing);
    CHECK(cfg.scenario->mu0 == cfg.params.mu_bar);
    CHECK(cfg.scenario->rate_param == 0.02);

    cfg = parse_config_text(
        default_param_block() + "command = simulate\nscenario = fast_growing\n", "inline");
    CHECK(cfg.scenario->kind == PriceScenario::Kind::FastGrowing);
    CHECK(cfg.scenario->rate_param == 0.05);

    cfg = parse_config_text(default_param_block() +
                                "command = simulate\nscenario = proportional\n"
                                "scenario_mu0 = 2.5\nhorizon = 7\n",
                            "inline");
    CHECK(cfg.scenario->kind == PriceScenario::Kind::Proportional);
    CHECK(cfg.scenario->mu0 == 2.5);
    CHECK(cfg.horizon == 7);

    CHECK(contains(error_text(default_param_block() +
                              "command = simulate\nscenario = decreasing\nscenario_rate = -1\n"),
                   "rate"));
    CHECK(contains(error_text(default_param_block() +
                              "command = simulate\nscenario = sideways\n"),
                   "scenario"));
}

TEST_CASE("sweep command: all four grid keys are required and checked") {
    CHECK(contains(error_text(default_param_block() + "command = sweep\nsweep_param = m\n"),
                   "needs sweep_param, sweep_lo, sweep_hi and sweep_steps"));
    CHECK(contains(error_text(default_param_block() +
                              "command = sweep\nsweep_param = m\nsweep_lo = 3\n"
                              "sweep_hi = 2\nsweep_steps = 5\n"),
                   "sweep_lo < sweep_hi"));
    CHECK(contains(error_text(default_param_block() +
                              "command = sweep\nsweep_param = m\nsweep_lo = 2\n"
                              "sweep_hi = 3\nsweep_steps = 1\n"),
                   "sweep_steps"));
    CHECK(contains(error_text(default_param_block() +
                              "command = sweep\nsweep_param = beta\nsweep_lo = 2\n"
                              "sweep_hi = 3\nsweep_steps = 5\n"),
                   "sweep_param must be alpha or m"));

    const RunConfig cfg = parse_config_text(default_param_block() +
                                                "command = sweep\nsweep_param = alpha\n"
                                                "sweep_lo = 0.1\nsweep_hi = 0.9\n"
                                                "sweep_steps = 17\n",
                                            "inline");
    REQUIRE(cfg.sweep.has_value());
    CHECK(cfg.sweep->param == SweepParam::Alpha);
    CHECK(cfg.sweep->lo == 0.1);
    CHECK(cfg.sweep->hi == 0.9);
    CHECK(cfg.sweep->steps == 17);
}

TEST_CASE("number formatting survives a text round trip") {
    for (double v : {0.1, 1.0 / 3.0, 2.5e-17, 1.3338707472476657, 123456789.0, 1e300}) {
        const std::string s = csv::fmt(v);
        char* end = nullptr;
        CHECK(std::strtod(s.c_str(), &end) == v);
        CHECK(*end == '\0');
    }
    CHECK(csv::fmt(static_cast<std::int64_t>(42)) == "42");
}

TEST_CASE("preamble echoes the configuration as comments") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::SolveBgp;
    const std::string pre = csv::config_preamble(cfg);
    std::istringstream lines(pre);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        REQUIRE(!line.empty());
        CHECK(line[0] == '#');
        ++n;
    }
    CHECK(n >= 14);  // 12 parameters + command + solver tolerance at least
    CHECK(contains(pre, "alpha = 0.29999999999999999"));
    CHECK(contains(pre, "command = solve_bgp"));
}

TEST_CASE("result tables: headers and cell counts are stable") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::SolveBgp;
    const BgpSolution sol = solve_bgp(cfg.params);
    const std::string bgp = csv::bgp_csv(cfg, sol);
    CHECK(contains(bgp,
                   "alpha,m,phi,kappa,beta,eta,theta,epsilon,r,mu_bar,l_bar,r_bar,"
                   "n_star,d_star,growth,arrival_flow,jacobian_det,a1,a2,a3,phi_residual"));
    // Exactly one data row, 21 cells.
    std::istringstream lines(bgp);
    std::string line, data;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (rows++ == 1) data = line;
    }
    CHECK(rows == 2);
    CHECK(count_lines(data, ',') == 20);

    cfg.command = Command::Sweep;
    cfg.sweep = SweepSpec{SweepParam::Alpha, 0.1, 0.9, 5};
    ModelParams hard = default_params();
    hard.mu_bar = 400.0;
    const SweepResult sw = sweep(hard, SweepParam::Alpha, 0.1, 0.9, 5);
    const std::string sweep_text = csv::sweep_csv(cfg, sw);
    CHECK(contains(sweep_text,
                   "param_value,n_star,d_star,dd_dm,dn_dm,dd_dalpha,dn_dalpha,alpha_c,region"));
    bool saw_failed = false;
    std::istringstream sweep_lines(sweep_text);
    while (std::getline(sweep_lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
        CHECK(count_lines(line, ',') == 8);
        if (contains(line, "failed")) saw_failed = true;
    }
    CHECK(saw_failed);
}

TEST_CASE("path table rows follow the simulated horizon") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::Simulate;
    PriceScenario s;
    s.kind = PriceScenario::Kind::Proportional;
    s.mu0 = cfg.params.mu_bar;
    cfg.scenario = s;
    cfg.horizon = 5;

    const BgpSolution sol = solve_bgp(cfg.params);
    const ScenarioPath path = simulate(bgp_initial_state(cfg.params, sol, s), s, 5, cfg.params);
    const std::string text = csv::path_csv(cfg, path);
    CHECK(contains(text, "t,a,w,mu,n,d,growth_per_period,arrival_flow,converged"));
    std::istringstream lines(text);
    std::string line;
    int data_rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        CHECK(count_lines(line, ',') == 8);
        ++data_rows;
    }
    CHECK(data_rows == 6);
}

TEST_CASE("write_file creates directories and reports unwritable targets") {
    const fs::path dir = fresh_dir("writer");
    const fs::path nested = dir / "a" / "b" / "out.csv";
    csv::write_file(nested.string(), "x,y\n1,2\n");
    CHECK(slurp(nested) == "x,y\n1,2\n");

    const fs::path blocker = dir / "blocker";
    std::ofstream(blocker) << "file";
    CHECK_THROWS_AS(csv::write_file((blocker / "sub" / "out.csv").string(), "z"),
                    csv::IoError);
}

TEST_CASE("front end: solve writes its table and succeeds") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::SolveBgp;
    const fs::path dir = fresh_dir("solve");
    cfg.output_dir = dir.string();
    CHECK(recomb::run(cfg) == kExitOk);
    const std::string text = slurp(dir / "bgp.csv");
    CHECK(contains(text, "n_star"));
    CHECK(contains(text, "1.33387074"));  // solver stops at |gap| < 1e-10
}

TEST_CASE("front end: solver failures map to the solver exit code") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.params.mu_bar = 1e8;  // entry never pays
    cfg.command = Command::SolveBgp;
    cfg.output_dir = fresh_dir("solve_fail").string();
    CHECK(recomb::run(cfg) == kExitSolver);
}

TEST_CASE("front end: unwritable output directory maps to the io exit code") {
    const fs::path dir = fresh_dir("io_fail");
    const fs::path blocker = dir / "not_a_dir";
    std::ofstream(blocker) << "file";
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::SolveBgp;
    cfg.output_dir = (blocker / "sub").string();
    CHECK(recomb::run(cfg) == kExitIo);
}

TEST_CASE("front end: simulate and sweep write the expected files") {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.command = Command::Simulate;
    PriceScenario s;
    s.kind = PriceScenario::Kind::Decreasing;
    s.mu0 = cfg.params.mu_bar;
    s.rate_param = 0.02;
    cfg.scenario = s;
    cfg.horizon = 3;
    const fs::path dir = fresh_dir("sim_sweep");
    cfg.output_dir = dir.string();
    CHECK(recomb::run(cfg) == kExitOk);
    CHECK(fs::exists(dir / "path_decreasing.csv"));

    RunConfig sw;
    sw.params = default_params();
    sw.command = Command::Sweep;
    sw.sweep = SweepSpec{SweepParam::M, 2.0, 4.0, 5};
    sw.output_dir = dir.string();
    CHECK(recomb::run(sw) == kExitOk);
    CHECK(fs::exists(dir / "sweep_m.csv"));
    const std::string text = slurp(dir / "sweep_m.csv");
    CHECK(count_lines(text) == 6 + count_lines(csv::config_preamble(sw)));
}
