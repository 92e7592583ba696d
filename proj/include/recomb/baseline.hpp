#pragma once

#include "recomb/params.hpp"

namespace recomb {

/// Distance choice of a stand-alone innovator (no ladder, no spillover).
struct BaselineChoice {
    double d_star;               // (eta/beta) * ai_power
    double ai_power;
    double objective_at_optimum; // success * payoff - cost at d_star
    bool would_not_enter;        // objective_at_optimum < 0
};

// Expected one-shot value of distance d at wage w and AI price mu:
// success_probability(d) * payoff_step(d) - recombination_cost(w, mu).
double baseline_objective(double d, double w, double mu, const ModelParams& p);

// Closed-form optimum of the objective above; (w, mu) only move the flat
// cost term, so d_star is independent of them.
BaselineChoice baseline_optimal_distance(const ModelParams& p, double w, double mu);

// Convenience overload at unit-knowledge prices (w = wage coefficient,
// mu = mu_bar), the ladder-consistent normalization.
BaselineChoice baseline_optimal_distance(const ModelParams& p);

}  // namespace recomb
