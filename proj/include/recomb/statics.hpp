#pragma once

#include <string>
#include <vector>

#include "recomb/bgp.hpp"
#include "recomb/params.hpp"

namespace recomb {

/// Partial derivatives of the two loci at an equilibrium, closed forms.
struct LocusPartials {
    double r_n;      // dR/dn (< 0)
    double r_m;      // dR/dm (> 0)
    double r_alpha;  // dR/dalpha, sign of (kappa - alpha)
    double e_d;      // dE/dd (> 0)
    double e_m;      // dE/dm (> 0)
    double e_alpha;  // dE/dalpha, sign of (alpha - alpha_c)
};

enum class AlphaRegion { LowAlpha, IntermediateAlpha, HighAlpha };

const char* to_string(AlphaRegion region);

/// Entry response to alpha in the intermediate band depends on how the cost
/// threshold orders against kappa; reported as an advisory, not asserted.
enum class IntermediateEntryNote { NotApplicable, EntryRises, EntryFalls };

struct StaticsReport {
    LocusPartials partials;
    double jacobian_det;  // 1 - e_d * r_n
    double dd_dm;
    double dn_dm;         // positive for every valid parameter set
    double dd_dalpha;
    double dn_dalpha;
    double alpha_c;
    AlphaRegion region;
    IntermediateEntryNote note;
    // Relative gaps between the implicit-function totals above and re-solved
    // central finite differences (populated by total_derivatives).
    double fd_gap_dd_dm;
    double fd_gap_dn_dm;
    double fd_gap_dd_dalpha;
    double fd_gap_dn_dalpha;
};

LocusPartials locus_partials(const BgpSolution& sol, const ModelParams& p);

// AI share above which a higher alpha raises the entry cost: mu_bar/(mu_bar + m*iota).
double alpha_cost_threshold(double mu_bar, double m, double iota);
double alpha_cost_threshold(const ModelParams& p);

// Boundary ties resolve to IntermediateAlpha.
AlphaRegion classify_region(double alpha, double alpha_c, double kappa);

// Equilibrium responses dd*/dp and dn*/dp for p in {m, alpha} via the
// implicit-function rule on (n - E(d), d - R(n)), cross-validated against
// re-solving at p +/- h (central differences, h = fd_rel_step * max(1, |p|)).
StaticsReport total_derivatives(const BgpSolution& sol, const ModelParams& p,
                                double fd_rel_step = 1e-5,
                                const BgpSolveOptions& solve_opt = {});

enum class SweepParam { Alpha, M };

struct SweepPoint {
    double value;
    bool ok;
    std::string error;  // non-empty when ok is false
    BgpSolution sol;
    StaticsReport statics;
};

struct SweepResult {
    SweepParam param;
    std::vector<SweepPoint> points;
    double peak_alpha;    // alpha at which d* peaks (alpha sweeps; NaN otherwise)
    double peak_d_star;
};

// One grid point: substitute `value` for the swept parameter (alpha clamped
// off the boundary), solve, differentiate. Solver errors land in `error`.
SweepPoint evaluate_sweep_point(const ModelParams& p, SweepParam param, double value,
                                const BgpSolveOptions& solve_opt);

// Re-solve and differentiate over an inclusive uniform grid. Alpha values are
// clamped away from {0,1} by the guard used in clamp_alpha. Per-point solver
// failures are recorded and the sweep continues.
SweepResult sweep(const ModelParams& p, SweepParam param, double lo, double hi,
                  int steps, const BgpSolveOptions& solve_opt = {});

}  // namespace recomb
