#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "recomb/bgp.hpp"
#include "recomb/params.hpp"

namespace recomb {

struct NoInteriorOptimumError : std::runtime_error {
    explicit NoInteriorOptimumError(const std::string& what) : std::runtime_error(what) {}
};

/// Law of motion for the AI price.
struct PriceScenario {
    enum class Kind { Proportional, FastGrowing, Decreasing };
    Kind kind = Kind::Proportional;
    double mu0 = 1.0;         // initial price level (Decreasing)
    double rate_param = 0.0;  // growth wedge (FastGrowing) or decay rate (Decreasing)

    // Price in period t when the knowledge stock is a.
    double mu_at(double t, double a, const ModelParams& p) const;
    void validate(const ModelParams& p) const;  // throws std::invalid_argument
};

const char* to_string(PriceScenario::Kind kind);

// Exact research first-order condition, as a residual in the chosen distance d.
// `arrival_next` is the firm's expectation of next period's arrival mass
// (firms times success probability, before the spillover scale, which involves
// the firm's own d and appears explicitly). Strictly decreasing in d;
// positive below the optimum, negative above.
double foc_residual(double d, double arrival_next, const ModelParams& p);

// Leading-order closed form for the optimal distance, used as solver seed.
double taylor_distance(double arrival_next, const ModelParams& p);

// Root of foc_residual by seeded, expanded bracketing + bisection to ~machine
// width. Throws NoInteriorOptimumError if no sign change brackets a maximum.
double solve_distance_exact(double arrival_next, const ModelParams& p, double tol = 1e-12);

// Firm mass from exact free entry given knowledge a, distance d, AI price mu.
// The condition is linear in n; returns the rearrangement clipped at 0
// (no entry when even n = 0 leaves the value below cost).
double solve_entry_exact(double a, double d, double mu, const ModelParams& p);

// Relative residual of exact free entry at (a, d, mu, n): value/cost - 1
// (clipped at 0 from below when n = 0 is a corner).
double entry_residual(double a, double d, double mu, double n, const ModelParams& p);

struct StepResult {
    EconomyState state;    // fully resolved: its (n, d) solve its period
    bool converged;
    int iterations;
    double foc_resid;      // |foc_residual| at the recorded state
    double entry_resid;    // |entry_residual| at the recorded state
};

constexpr int kStepMaxIterations = 500;
constexpr double kStepDamping = 0.5;

// Within-period equilibrium at (a, mu), warm-started from (d0, n0): damped
// fixed point over (d, n) with firms expecting next period to repeat the
// current iterate. Converged when both residuals fall below tol/4.
StepResult resolve_period(std::int64_t t, double a, double mu,
                          double d0, double n0,
                          const ModelParams& p, double tol = 1e-9);

// Advance one period from a resolved state: knowledge moves by the recorded
// distance, prices follow the scenario, then the new period is resolved.
StepResult step(const EconomyState& state, const PriceScenario& scenario,
                const ModelParams& p, double tol = 1e-9);

struct ScenarioPath {
    std::vector<EconomyState> states;      // horizon + 1 entries, t = 0..horizon
    std::vector<double> growth_rates;      // payoff_step(d_t), one per state
    std::vector<double> arrival_flows;     // n * success * gpt_scaling, one per state
    std::vector<bool> converged_flags;
    std::vector<double> foc_residuals;
    std::vector<double> entry_residuals;
};

// Initial state on the exact system implied by a balanced-path solution:
// knowledge a0, its wage, the scenario's period-0 price, and the approximate
// (n*, d*) as warm start for the period-0 resolve.
EconomyState bgp_initial_state(const ModelParams& p, const BgpSolution& sol,
                               const PriceScenario& scenario, double a0 = 1.0);

// Resolve period 0 at init's (a, mu), then step `horizon` times.
ScenarioPath simulate(const EconomyState& init, const PriceScenario& scenario,
                      int horizon, const ModelParams& p, double tol = 1e-9);

}  // namespace recomb
