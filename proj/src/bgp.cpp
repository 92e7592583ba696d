#include "recomb/bgp.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "recomb/primitives.hpp"
#include "recomb/rootfind.hpp"

namespace recomb {

namespace {

// S(n) = beta/lambda + n*theta/(r+n): the congestion-adjusted marginal cost of
// distance entering the research first-order condition. Shared by R and its slope.
double locus_denominator(double n, double power, const ModelParams& p) {
    return p.beta / power + n * p.theta / (p.r + n);
}

}  // namespace

double distance_locus(double n, const ModelParams& p) {
    p.validate();
    if (!(n >= 0.0)) throw std::domain_error("firm mass must be >= 0");
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const double q = p.eta / (1.0 - p.epsilon);
    const double s = locus_denominator(n, power, p);
    return std::pow(q / s, 1.0 / (1.0 - p.eta));
}

double entry_locus(double d, const ModelParams& p) {
    p.validate();
    if (!(d >= 0.0)) throw std::domain_error("distance must be >= 0");
    const DerivedConstants dc = derived_constants(p);
    const double lift =
        std::exp(std::log1p(payoff_step(d, p.eta)) / (1.0 - p.epsilon));
    return dc.profit_coef * lift / dc.unit_cost - p.r;
}

double phi_gap(double n, const ModelParams& p) {
    return entry_locus(distance_locus(n, p), p) - n;
}

double entry_locus_slope(double d, const ModelParams& p) {
    p.validate();
    if (!(d > 0.0)) {
        throw std::domain_error("entry-locus slope needs distance > 0 (it diverges at 0)");
    }
    const double step = payoff_step(d, p.eta);
    return (entry_locus(d, p) + p.r) * p.eta * std::pow(d, p.eta - 1.0) /
           ((1.0 - p.epsilon) * (1.0 + step));
}

double distance_locus_slope(double n, const ModelParams& p) {
    p.validate();
    if (!(n >= 0.0)) throw std::domain_error("firm mass must be >= 0");
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const double s = locus_denominator(n, power, p);
    const double horizon = p.r + n;
    return -distance_locus(n, p) * (p.theta * p.r / (horizon * horizon)) /
           ((1.0 - p.eta) * s);
}

BgpSolution solve_bgp(const ModelParams& p, const BgpSolveOptions& opt) {
    p.validate();
    // Phi(0) = E(R(0)): the firm mass free entry would support if research were
    // congestion-free. It must be positive for anyone to enter at all, and it
    // bounds the root because Phi(E(R(0)) + 1) <= -1 when E is decreasing in n
    // through R.
    const double phi0 = phi_gap(0.0, p);
    if (!(phi0 > 0.0)) {
        std::ostringstream msg;
        msg << "free entry is unprofitable even with zero competitors (net value "
            << phi0 << "); no balanced path with positive research";
        throw NoEntryError(msg.str());
    }
    const double n_hi = phi0 + 1.0;

    BisectOptions bopt;
    bopt.f_tol = opt.tol;
    bopt.max_iter = opt.max_iter;
    bopt.secant_after = opt.secant_refine ? 40 : -1;
    const double n_star =
        bisect([&p](double n) { return phi_gap(n, p); }, 0.0, n_hi, bopt);

    BgpSolution sol{};
    sol.n_star = n_star;
    sol.d_star = distance_locus(n_star, p);
    sol.growth_per_innovation = payoff_step(sol.d_star, p.eta);
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    sol.arrival_flow = n_star * success_probability(sol.d_star, power, p.beta) *
                       gpt_scaling(sol.d_star, p.theta);
    sol.phi_residual = std::abs(entry_locus(sol.d_star, p) - n_star);
    sol.distance_residual = std::abs(sol.d_star - distance_locus(n_star, p));
    sol.jacobian_det = jacobian_determinant(sol, p);
    sol.assumptions = validate_params(p, n_star, opt.a2_threshold);
    return sol;
}

double jacobian_determinant(const BgpSolution& sol, const ModelParams& p) {
    return 1.0 -
           entry_locus_slope(sol.d_star, p) * distance_locus_slope(sol.n_star, p);
}

// Defined here rather than with the parameter box: the zero-competition entry
// margin needs the distance locus, and the labor-share ratio needs the
// research cost mix.
ValidationReport validate_params(const ModelParams& p, std::optional<double> n_star,
                                 double a2_threshold) {
    p.validate();
    ValidationReport rep{};
    const DerivedConstants dc = derived_constants(p);

    // Entry with zero competitors: discounted expected innovation value per
    // unit of entry cost, at the congestion-free distance R(0).
    const double d0 = distance_locus(0.0, p);
    const double value_ratio = success_probability(d0, dc.ai_power, p.beta) *
                               (entry_locus(d0, p) + p.r) / p.r;
    rep.a1 = value_ratio > 1.0;
    rep.a1_excess = value_ratio - 1.0;

    // Research labor against the production workforce; needs a firm count.
    rep.a2_threshold = a2_threshold;
    if (n_star.has_value()) {
        const double labor =
            *n_star * research_labor_per_firm(dc.wage_coef, p.mu_bar, p);
        rep.a2_ratio = labor / p.l_bar;
        rep.a2 = rep.a2_ratio < a2_threshold;
        rep.a2_evaluated = true;
    } else {
        rep.a2_ratio = std::numeric_limits<double>::quiet_NaN();
        rep.a2 = true;
        rep.a2_evaluated = false;
    }

    // Interior optimum in the exact problem: the arrival-scale spillover must
    // outweigh the success-probability drag.
    rep.a3_margin = p.theta - p.beta / dc.ai_power;
    rep.a3 = gpt_margin_positive(p.theta, p.beta, dc.ai_power);
    return rep;
}

}  // namespace recomb
