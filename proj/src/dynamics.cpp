#include "recomb/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "recomb/primitives.hpp"
#include "recomb/rootfind.hpp"

namespace recomb {

const char* to_string(PriceScenario::Kind kind) {
    switch (kind) {
        case PriceScenario::Kind::Proportional: return "proportional";
        case PriceScenario::Kind::FastGrowing: return "fast_growing";
        case PriceScenario::Kind::Decreasing: return "decreasing";
    }
    return "unknown";
}

void PriceScenario::validate(const ModelParams& p) const {
    p.validate();
    std::ostringstream errs;
    const char* sep = "";
    if (!std::isfinite(mu0) || !(mu0 > 0.0)) {
        errs << sep << "scenario mu0 must be a positive real";
        sep = "; ";
    }
    // The rate shapes the two non-proportional laws and must push them in
    // their named direction; it is ignored under Proportional.
    if (kind != Kind::Proportional &&
        (!std::isfinite(rate_param) || !(rate_param > 0.0))) {
        errs << sep << "scenario rate must be a positive real for "
             << to_string(kind) << " pricing";
        sep = "; ";
    }
    if (*sep != '\0') throw std::invalid_argument(errs.str());
}

double PriceScenario::mu_at(double t, double a, const ModelParams& p) const {
    validate(p);
    if (!(a > 0.0)) throw std::domain_error("knowledge stock must be > 0");
    switch (kind) {
        case Kind::Proportional:
            return p.mu_bar * a;
        case Kind::FastGrowing:
            return p.mu_bar * std::pow(a, 1.0 + rate_param);
        case Kind::Decreasing:
            return mu0 * std::exp(-rate_param * t);
    }
    return p.mu_bar * a;
}

double foc_residual(double d, double arrival_next, const ModelParams& p) {
    p.validate();
    if (!(d > 0.0)) {
        throw std::domain_error("distance must be > 0 in the research optimality condition");
    }
    if (!(arrival_next >= 0.0)) throw std::domain_error("arrival mass must be >= 0");
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const double marginal_gain = p.eta * std::pow(d, p.eta - 1.0) /
                                 ((1.0 - p.epsilon) * (1.0 + payoff_step(d, p.eta)));
    // Lambda*theta*e^(theta d) / (r + Lambda*e^(theta d)), rearranged so large
    // theta*d cannot overflow the exponential.
    double displacement = 0.0;
    if (arrival_next > 0.0) {
        displacement =
            p.theta / (1.0 + (p.r / arrival_next) * std::exp(-p.theta * d));
    }
    return marginal_gain - p.beta / power - displacement;
}

double taylor_distance(double arrival_next, const ModelParams& p) {
    p.validate();
    if (!(arrival_next >= 0.0)) throw std::domain_error("arrival mass must be >= 0");
    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const double s =
        p.beta / power + arrival_next * p.theta / (p.r + arrival_next);
    return std::pow(p.eta / (1.0 - p.epsilon) / s, 1.0 / (1.0 - p.eta));
}

double solve_distance_exact(double arrival_next, const ModelParams& p, double tol) {
    p.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const auto f = [&](double d) { return foc_residual(d, arrival_next, p); };
    // The residual is strictly decreasing and positive just above zero, so the
    // seeded bracket expands geometrically onto the sign change.
    const double seed = taylor_distance(arrival_next, p);
    double lo = seed;
    double hi = seed;
    int guard = 0;
    while (f(lo) < 0.0) {
        lo *= 0.5;
        if (++guard > 600) {
            throw NoInteriorOptimumError(
                "research optimality condition stays negative toward zero distance");
        }
    }
    guard = 0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (++guard > 600) {
            throw NoInteriorOptimumError(
                "research optimality condition stays positive at large distance");
        }
    }
    BisectOptions opt;
    opt.f_tol = tol;
    opt.max_iter = 200;  // enough to reach the floating-point width floor
    return bisect(f, lo, hi, opt);
}

namespace {

// log of (next-period profit / entry cost) at knowledge a, price mu; the
// knowledge scale enters both sides and cancels to rounding, which keeps the
// rearranged entry condition stable far along a growth path.
double log_value_per_cost(double a, double d, double mu, const ModelParams& p,
                          const DerivedConstants& dc) {
    const double w = dc.wage_coef * a;
    return std::log(dc.profit_coef) + std::log(a) +
           std::log1p(payoff_step(d, p.eta)) / (1.0 - p.epsilon) -
           std::log(recombination_cost(w, mu, p));
}

void require_period_inputs(double a, double d, double mu) {
    if (!(a > 0.0)) throw std::domain_error("knowledge stock must be > 0");
    if (!(d >= 0.0)) throw std::domain_error("distance must be >= 0");
    if (!(mu > 0.0)) throw std::domain_error("AI price must be > 0");
}

}  // namespace

double solve_entry_exact(double a, double d, double mu, const ModelParams& p) {
    p.validate();
    require_period_inputs(a, d, mu);
    const DerivedConstants dc = derived_constants(p);
    const double p_succ = success_probability(d, dc.ai_power, p.beta);
    // Free entry is linear in the firm mass: p*pi/C = r + n*p*psi.
    const double gross = p_succ * std::exp(log_value_per_cost(a, d, mu, p, dc));
    const double n = (gross - p.r) / (p_succ * gpt_scaling(d, p.theta));
    return std::max(n, 0.0);
}

double entry_residual(double a, double d, double mu, double n, const ModelParams& p) {
    p.validate();
    require_period_inputs(a, d, mu);
    if (!(n >= 0.0)) throw std::domain_error("firm mass must be >= 0");
    const DerivedConstants dc = derived_constants(p);
    const double p_succ = success_probability(d, dc.ai_power, p.beta);
    const double gross = p_succ * std::exp(log_value_per_cost(a, d, mu, p, dc));
    const double discounted = gross / (p.r + n * p_succ * gpt_scaling(d, p.theta));
    const double resid = discounted - 1.0;
    // With nobody entering, value short of cost is the consistent corner.
    if (n == 0.0 && resid < 0.0) return 0.0;
    return resid;
}

StepResult resolve_period(std::int64_t t, double a, double mu, double d0, double n0,
                          const ModelParams& p, double tol) {
    p.validate();
    require_period_inputs(a, d0, mu);
    if (!(d0 > 0.0)) throw std::domain_error("warm-start distance must be > 0");
    if (!(n0 >= 0.0)) throw std::domain_error("warm-start firm mass must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const double resid_tol = 0.25 * tol;
    double d = d0;
    double n = n0;
    double foc_r = std::numeric_limits<double>::infinity();
    double entry_r = std::numeric_limits<double>::infinity();
    bool converged = false;
    int it = 0;
    for (; it < kStepMaxIterations; ++it) {
        const double lam_expect = n * success_probability(d, power, p.beta);
        foc_r = std::abs(foc_residual(d, lam_expect, p));
        entry_r = std::abs(entry_residual(a, d, mu, n, p));
        if (foc_r < resid_tol && entry_r < resid_tol) {
            converged = true;
            break;
        }
        const double d_best = solve_distance_exact(lam_expect, p);
        const double n_best = solve_entry_exact(a, d_best, mu, p);
        d += kStepDamping * (d_best - d);
        n += kStepDamping * (n_best - n);
    }
    if (!converged) {
        // The final damped update was never residual-checked.
        const double lam_expect = n * success_probability(d, power, p.beta);
        foc_r = std::abs(foc_residual(d, lam_expect, p));
        entry_r = std::abs(entry_residual(a, d, mu, n, p));
        converged = foc_r < resid_tol && entry_r < resid_tol;
    }

    StepResult res{};
    res.state = EconomyState{t, a, derived_constants(p).wage_coef * a, mu, n, d};
    res.converged = converged;
    res.iterations = it;
    res.foc_resid = foc_r;
    res.entry_resid = entry_r;
    return res;
}

StepResult step(const EconomyState& state, const PriceScenario& scenario,
                const ModelParams& p, double tol) {
    p.validate();
    scenario.validate(p);
    if (!(state.a > 0.0)) throw std::domain_error("knowledge stock must be > 0");
    const double a_next = state.a * (1.0 + payoff_step(state.d, p.eta));
    const std::int64_t t_next = state.t + 1;
    const double mu_next =
        scenario.mu_at(static_cast<double>(t_next), a_next, p);
    return resolve_period(t_next, a_next, mu_next, state.d, state.n, p, tol);
}

EconomyState bgp_initial_state(const ModelParams& p, const BgpSolution& sol,
                               const PriceScenario& scenario, double a0) {
    p.validate();
    scenario.validate(p);
    if (!(a0 > 0.0)) throw std::domain_error("initial knowledge must be > 0");
    EconomyState s{};
    s.t = 0;
    s.a = a0;
    s.w = derived_constants(p).wage_coef * a0;
    s.mu = scenario.mu_at(0.0, a0, p);
    s.n = sol.n_star;
    s.d = sol.d_star;
    return s;
}

ScenarioPath simulate(const EconomyState& init, const PriceScenario& scenario,
                      int horizon, const ModelParams& p, double tol) {
    p.validate();
    scenario.validate(p);
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

    ScenarioPath path;
    const std::size_t count = static_cast<std::size_t>(horizon) + 1;
    path.states.reserve(count);
    path.growth_rates.reserve(count);
    path.arrival_flows.reserve(count);
    path.converged_flags.reserve(count);
    path.foc_residuals.reserve(count);
    path.entry_residuals.reserve(count);

    const double power = ai_power(p.m, p.phi, p.alpha, p.kappa);
    const auto append = [&](const StepResult& r) {
        const EconomyState& s = r.state;
        path.states.push_back(s);
        path.growth_rates.push_back(payoff_step(s.d, p.eta));
        path.arrival_flows.push_back(s.n * success_probability(s.d, power, p.beta) *
                                     gpt_scaling(s.d, p.theta));
        path.converged_flags.push_back(r.converged);
        path.foc_residuals.push_back(r.foc_resid);
        path.entry_residuals.push_back(r.entry_resid);
    };

    StepResult cur = resolve_period(
        init.t, init.a, scenario.mu_at(static_cast<double>(init.t), init.a, p),
        init.d, init.n, p, tol);
    append(cur);
    for (int k = 0; k < horizon; ++k) {
        cur = step(cur.state, scenario, p, tol);
        append(cur);
    }
    return path;
}

}  // namespace recomb
