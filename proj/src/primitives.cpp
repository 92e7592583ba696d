#include "recomb/primitives.hpp"

#include <cmath>
#include <stdexcept>

namespace recomb {

namespace {

void require_nonnegative_distance(double d) {
    if (!(d >= 0.0)) throw std::domain_error("distance must be >= 0");
}

void require_positive(const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be a positive real");
    }
}

}  // namespace

double ai_power(double m, double phi, double alpha, double kappa, bool* at_boundary) {
    require_positive("m", m);
    if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1] for the power index");
    }
    if (at_boundary) *at_boundary = (alpha == 0.0 || alpha == 1.0);
    if (alpha == 0.0 || alpha == 1.0) return 0.0;  // analytic limit of the Cobb-Douglas mix
    return std::exp(phi * std::log(m) + kappa * std::log(alpha) +
                    (1.0 - kappa) * std::log1p(-alpha));
}

double ai_power(const ModelParams& p) {
    p.validate();
    return ai_power(p.m, p.phi, p.alpha, p.kappa);
}

double clamp_alpha(double alpha, double guard, bool* clamped) {
    double out = alpha;
    if (out < guard) out = guard;
    if (out > 1.0 - guard) out = 1.0 - guard;
    if (clamped) *clamped = (out != alpha);
    return out;
}

double success_probability(double d, double power, double beta) {
    require_nonnegative_distance(d);
    require_positive("power", power);
    require_positive("beta", beta);
    return std::exp(-beta * d / power);
}

double success_probability(double d, const ModelParams& p) {
    p.validate();
    return success_probability(d, ai_power(p.m, p.phi, p.alpha, p.kappa), p.beta);
}

double payoff_step(double d, double eta) {
    require_nonnegative_distance(d);
    return std::pow(d, eta);
}

double payoff_step(double d, const ModelParams& p) {
    p.validate();
    return payoff_step(d, p.eta);
}

double gpt_scaling(double d_prev, double theta) {
    require_nonnegative_distance(d_prev);
    return std::exp(theta * d_prev);
}

double gpt_scaling(double d_prev, const ModelParams& p) {
    p.validate();
    return gpt_scaling(d_prev, p.theta);
}

double recombination_cost(double w, double mu, const ModelParams& p) {
    p.validate();
    require_positive("w", w);
    require_positive("mu", mu);
    // Unit cost of the cost-minimizing labor/AI mix; homogeneous of degree 1
    // in (w, mu) and decreasing in m.
    return std::exp(-p.alpha * std::log(p.alpha) - (1.0 - p.alpha) * std::log1p(-p.alpha) +
                    (1.0 - p.alpha) * std::log(w) + p.alpha * std::log(mu) -
                    p.alpha * std::log(p.m));
}

double research_labor_per_firm(double w, double mu, const ModelParams& p) {
    p.validate();
    require_positive("w", w);
    require_positive("mu", mu);
    return std::exp(-p.alpha * (std::log(p.m) + std::log(w) - std::log(mu) +
                                std::log(p.alpha) - std::log1p(-p.alpha)));
}

double wage(double a, const ModelParams& p) {
    p.validate();
    require_positive("a", a);
    return derived_constants(p).wage_coef * a;
}

double optimal_quantity(double a, double w, double epsilon) {
    require_positive("a", a);
    require_positive("w", w);
    require_positive("epsilon", epsilon);
    return std::exp((2.0 * std::log(epsilon) + std::log(a) - std::log(w)) / (1.0 - epsilon));
}

double profit_coefficient(double w, double epsilon) {
    require_positive("w", w);
    require_positive("epsilon", epsilon);
    return std::exp(std::log1p(-epsilon) +
                    (1.0 + epsilon) / (1.0 - epsilon) * std::log(epsilon) -
                    epsilon / (1.0 - epsilon) * std::log(w));
}

double optimal_profit(double a, double w, double epsilon) {
    require_positive("a", a);
    return std::exp(std::log(a) / (1.0 - epsilon)) * profit_coefficient(w, epsilon);
}

}  // namespace recomb
