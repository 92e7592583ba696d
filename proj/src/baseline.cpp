#include "recomb/baseline.hpp"

#include <cmath>
#include <stdexcept>

#include "recomb/primitives.hpp"

namespace recomb {

double baseline_objective(double d, double w, double mu, const ModelParams& p) {
    p.validate();
    if (!(d >= 0.0)) throw std::domain_error("distance must be >= 0");
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    return success_probability(d, power, p.beta) * payoff_step(d, p.eta) -
           recombination_cost(w, mu, p);
}

BaselineChoice baseline_optimal_distance(const ModelParams& p, double w, double mu) {
    p.validate();
    // exp(-beta d / power) d^eta peaks where eta/d = beta/power.
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    BaselineChoice out{};
    out.ai_power = power;
    out.d_star = p.eta / p.beta * power;
    out.objective_at_optimum = baseline_objective(out.d_star, w, mu, p);
    out.would_not_enter = out.objective_at_optimum < 0.0;
    return out;
}

BaselineChoice baseline_optimal_distance(const ModelParams& p) {
    const DerivedConstants dc = derived_constants(p);
    return baseline_optimal_distance(p, dc.wage_coef, p.mu_bar);
}

}  // namespace recomb
