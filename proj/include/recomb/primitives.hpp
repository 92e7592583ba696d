#pragma once

#include "recomb/params.hpp"

namespace recomb {

// Scalar building blocks of the model. The free-standing overloads take raw
// coefficients and are defined for any positive inputs; the ModelParams
// overloads validate first and throw std::invalid_argument on a bad set.
// Distance arguments must be >= 0 (std::domain_error otherwise).

// AI power index m^phi * alpha^kappa * (1-alpha)^(1-kappa).
// Exact endpoints alpha = 0 and alpha = 1 return the analytic limit 0
// and report it through `at_boundary` when provided.
double ai_power(double m, double phi, double alpha, double kappa,
                bool* at_boundary = nullptr);
double ai_power(const ModelParams& p);

// Clamp a sweep-supplied alpha into (guard, 1-guard). `clamped` reports
// whether the guard was applied.
double clamp_alpha(double alpha, double guard = 1e-9, bool* clamped = nullptr);

// Probability that a recombination at distance d succeeds: exp(-beta*d/power).
double success_probability(double d, double power, double beta);
double success_probability(double d, const ModelParams& p);

// Quality step from a successful recombination at distance d: d^eta.
double payoff_step(double d, double eta);
double payoff_step(double d, const ModelParams& p);

// Scale factor next period's arrival inherits from this period's distance.
double gpt_scaling(double d_prev, double theta);
double gpt_scaling(double d_prev, const ModelParams& p);

// Per-attempt recombination cost at wage w and AI price mu (cost-minimized
// mix of labor and AI at productivity multiple m).
double recombination_cost(double w, double mu, const ModelParams& p);

// Labor one research firm hires at the cost-minimizing mix.
double research_labor_per_firm(double w, double mu, const ModelParams& p);

// Competitive wage consistent with knowledge stock a: a^(eps-1)... via the
// labor-market closure w = l_bar^(eps-1) * eps^2 * a.
double wage(double a, const ModelParams& p);

// Monopoly supply and profit of a goods producer with knowledge a at wage w.
double optimal_quantity(double a, double w, double epsilon);
double optimal_profit(double a, double w, double epsilon);
// Reduced profit coefficient: optimal_profit(a, w) = a^(1/(1-eps)) * profit_coefficient(w).
double profit_coefficient(double w, double epsilon);

// Boundary-exact entry-value flag used by validate_params: strict theta > beta/power.
inline bool gpt_margin_positive(double theta, double beta, double power) {
    return theta > beta / power;
}

}  // namespace recomb
