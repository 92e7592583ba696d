#pragma once

#include <stdexcept>
#include <string>

#include "recomb/params.hpp"

namespace recomb {

struct NoEntryError : std::runtime_error {
    explicit NoEntryError(const std::string& what) : std::runtime_error(what) {}
};

/// Balanced-path equilibrium of the approximate (small-distance) system:
/// the distance locus R(n) from the research first-order condition and the
/// entry locus E(d) from free entry, intersected.
struct BgpSolution {
    double n_star;
    double d_star;
    double growth_per_innovation;  // payoff_step(d_star)
    double arrival_flow;           // n * success * gpt_scaling at the solution
    double jacobian_det;           // 1 - E_d * R_n, > 1 at any intersection
    double phi_residual;           // |E(R(n_star)) - n_star|
    double distance_residual;      // |d_star - R(n_star)|
    ValidationReport assumptions;  // a1-a3 evaluated at the solution
};

// R(n): distance implied by the approximated first-order condition when the
// expected next-period arrival mass is n. Strictly decreasing in n.
double distance_locus(double n, const ModelParams& p);

// E(d): firm mass implied by free entry when everyone innovates at distance d.
// Strictly increasing in d.
double entry_locus(double d, const ModelParams& p);

// Phi(n) = E(R(n)) - n. Strictly decreasing; its root is the equilibrium.
double phi_gap(double n, const ModelParams& p);

// Analytic locus slopes (closed forms, cross-checked against finite
// differences in the test suite).
double entry_locus_slope(double d, const ModelParams& p);     // dE/dd > 0
double distance_locus_slope(double n, const ModelParams& p);  // dR/dn < 0

struct BgpSolveOptions {
    double tol = 1e-10;       // on |Phi| at the returned root
    int max_iter = 200;
    bool secant_refine = false;  // false-position refinement after 40 bisection steps
    double a2_threshold = kDefaultA2Threshold;
};

// Bracketed solve of Phi on [0, E(R(0)) + 1]. Requires entry to be profitable
// at zero firms (Phi(0) > 0); throws NoEntryError otherwise.
BgpSolution solve_bgp(const ModelParams& p, const BgpSolveOptions& opt = {});

// det of the fixed-point Jacobian at (n_star, d_star): 1 - E_d * R_n.
double jacobian_determinant(const BgpSolution& sol, const ModelParams& p);

}  // namespace recomb
