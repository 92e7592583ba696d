#include "recomb/statics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "recomb/parallel.hpp"
#include "recomb/primitives.hpp"

namespace recomb {

namespace {

double rel_gap(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-12});
    return std::abs(a - b) / scale;
}

}  // namespace

const char* to_string(AlphaRegion region) {
    switch (region) {
        case AlphaRegion::LowAlpha: return "low_alpha";
        case AlphaRegion::IntermediateAlpha: return "intermediate_alpha";
        case AlphaRegion::HighAlpha: return "high_alpha";
    }
    return "unknown";
}

LocusPartials locus_partials(const BgpSolution& sol, const ModelParams& p) {
    p.validate();
    const DerivedConstants dc = derived_constants(p);
    const double n = sol.n_star;
    const double d = sol.d_star;
    if (!(n >= 0.0) || !(d > 0.0)) {
        throw std::domain_error("locus partials need n >= 0 and d > 0");
    }
    const double s = p.beta / dc.ai_power + n * p.theta / (p.r + n);
    const double curv = (1.0 - p.eta) * s;  // local curvature scale of R
    const double horizon = p.r + n;
    const double r_at_n = distance_locus(n, p);
    // Flow value term common to every entry-locus derivative: E(d) + r.
    const double flow = entry_locus(d, p) + p.r;

    LocusPartials lp{};
    lp.r_n = -r_at_n * (p.theta * p.r / (horizon * horizon)) / curv;
    lp.r_m = r_at_n * p.beta * p.phi / (curv * dc.ai_power * p.m);
    lp.r_alpha = r_at_n * (p.beta / dc.ai_power) * (p.kappa - p.alpha) /
                 (p.alpha * (1.0 - p.alpha)) / curv;
    lp.e_d = flow * p.eta * std::pow(d, p.eta - 1.0) /
             ((1.0 - p.epsilon) * (1.0 + payoff_step(d, p.eta)));
    lp.e_m = flow * p.alpha / p.m;
    // Log of the cost elasticity ratio; vanishes exactly at alpha_c.
    lp.e_alpha = -flow * std::log(p.mu_bar * (1.0 - p.alpha) /
                                  (p.alpha * p.m * dc.wage_coef));
    return lp;
}

double alpha_cost_threshold(double mu_bar, double m, double iota) {
    if (!(mu_bar > 0.0) || !(m > 0.0) || !(iota > 0.0)) {
        throw std::invalid_argument("alpha_cost_threshold needs positive arguments");
    }
    return mu_bar / (mu_bar + m * iota);
}

double alpha_cost_threshold(const ModelParams& p) {
    p.validate();
    return alpha_cost_threshold(p.mu_bar, p.m, derived_constants(p).wage_coef);
}

AlphaRegion classify_region(double alpha, double alpha_c, double kappa) {
    const double lo = std::min(alpha_c, kappa);
    const double hi = std::max(alpha_c, kappa);
    if (alpha < lo) return AlphaRegion::LowAlpha;
    if (alpha > hi) return AlphaRegion::HighAlpha;
    return AlphaRegion::IntermediateAlpha;
}

StaticsReport total_derivatives(const BgpSolution& sol, const ModelParams& p,
                                double fd_rel_step, const BgpSolveOptions& solve_opt) {
    if (!(fd_rel_step > 0.0)) {
        throw std::invalid_argument("fd_rel_step must be positive");
    }
    StaticsReport rep{};
    rep.partials = locus_partials(sol, p);
    const LocusPartials& lp = rep.partials;
    rep.jacobian_det = 1.0 - lp.e_d * lp.r_n;

    // Implicit-function rule on (d - R(n), n - E(d)) = 0.
    rep.dd_dm = (lp.r_m + lp.r_n * lp.e_m) / rep.jacobian_det;
    rep.dn_dm = (lp.e_m + lp.e_d * lp.r_m) / rep.jacobian_det;
    rep.dd_dalpha = (lp.r_alpha + lp.r_n * lp.e_alpha) / rep.jacobian_det;
    rep.dn_dalpha = (lp.e_alpha + lp.e_d * lp.r_alpha) / rep.jacobian_det;

    rep.alpha_c = alpha_cost_threshold(p);
    rep.region = classify_region(p.alpha, rep.alpha_c, p.kappa);
    if (rep.region != AlphaRegion::IntermediateAlpha || rep.alpha_c == p.kappa) {
        rep.note = IntermediateEntryNote::NotApplicable;
    } else if (p.kappa < rep.alpha_c) {
        // Band (kappa, alpha_c): both loci shift down in alpha, so firms exit.
        rep.note = IntermediateEntryNote::EntryFalls;
    } else {
        rep.note = IntermediateEntryNote::EntryRises;
    }

    // Cross-validation: re-solve at shifted parameters, central differences.
    const auto resolved = [&](const ModelParams& q) {
        const BgpSolution s = solve_bgp(q, solve_opt);
        return std::pair<double, double>(s.d_star, s.n_star);
    };
    {
        const double h = fd_rel_step * std::max(1.0, std::abs(p.m));
        ModelParams up = p;
        up.m += h;
        ModelParams down = p;
        down.m -= h;
        const auto [d_up, n_up] = resolved(up);
        const auto [d_dn, n_dn] = resolved(down);
        rep.fd_gap_dd_dm = rel_gap(rep.dd_dm, (d_up - d_dn) / (2.0 * h));
        rep.fd_gap_dn_dm = rel_gap(rep.dn_dm, (n_up - n_dn) / (2.0 * h));
    }
    {
        const double h = fd_rel_step * std::max(1.0, std::abs(p.alpha));
        ModelParams up = p;
        up.alpha += h;
        ModelParams down = p;
        down.alpha -= h;
        const auto [d_up, n_up] = resolved(up);
        const auto [d_dn, n_dn] = resolved(down);
        rep.fd_gap_dd_dalpha = rel_gap(rep.dd_dalpha, (d_up - d_dn) / (2.0 * h));
        rep.fd_gap_dn_dalpha = rel_gap(rep.dn_dalpha, (n_up - n_dn) / (2.0 * h));
    }
    return rep;
}

SweepPoint evaluate_sweep_point(const ModelParams& p, SweepParam param, double value,
                                const BgpSolveOptions& solve_opt) {
    SweepPoint pt{};
    pt.value = value;
    ModelParams q = p;
    if (param == SweepParam::Alpha) {
        q.alpha = clamp_alpha(value);
    } else {
        q.m = value;
    }
    try {
        pt.sol = solve_bgp(q, solve_opt);
        pt.statics = total_derivatives(pt.sol, q, 1e-5, solve_opt);
        pt.ok = true;
    } catch (const std::exception& e) {
        pt.ok = false;
        pt.error = e.what();
    }
    return pt;
}

SweepResult sweep(const ModelParams& p, SweepParam param, double lo, double hi,
                  int steps, const BgpSolveOptions& solve_opt) {
    p.validate();
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 grid points");
    if (!(hi > lo)) throw std::invalid_argument("sweep needs hi > lo");

    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }

    SweepResult out{};
    out.param = param;
    out.points = par::sweep_points(p, param, grid, solve_opt);
    out.peak_alpha = std::numeric_limits<double>::quiet_NaN();
    out.peak_d_star = std::numeric_limits<double>::quiet_NaN();
    if (param == SweepParam::Alpha) {
        bool seen = false;
        for (const SweepPoint& pt : out.points) {
            if (!pt.ok) continue;
            if (!seen || pt.sol.d_star > out.peak_d_star) {
                out.peak_alpha = pt.value;
                out.peak_d_star = pt.sol.d_star;
                seen = true;
            }
        }
    }
    return out;
}

}  // namespace recomb
