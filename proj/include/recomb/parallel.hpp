#pragma once

#include <cstdint>
#include <vector>

#include "recomb/bgp.hpp"
#include "recomb/params.hpp"
#include "recomb/statics.hpp"

namespace recomb::par {

// Worker cap: min(hardware, TOOL_THREADS env var when set to a positive
// integer). A cap of 1 routes every kernel through the serial twin.
int effective_threads();
// Apply the cap process-wide (no-op without OpenMP).
void configure_threads_from_env();

/// Uniform sign scan of the equilibrium gap Phi over [0, n_hi]. Independent
/// of the bisection path: pure grid evaluation, pairwise sign comparison.
struct GridScan {
    std::int64_t points;
    double n_hi;
    std::int64_t sign_changes;        // strict sign flips between neighbors
    std::int64_t first_change_index;  // left index of the first flip, -1 if none
};

GridScan phi_scan_serial(const ModelParams& p, std::int64_t points);
GridScan phi_scan_parallel(const ModelParams& p, std::int64_t points);
GridScan phi_scan(const ModelParams& p, std::int64_t points);  // dispatch

/// Batch equilibrium solves over independent parameter draws; results land in
/// input order regardless of scheduling, so parallel output is bit-identical
/// to serial.
struct BgpOutcome {
    bool ok;
    std::string error;
    BgpSolution sol;
};

std::vector<BgpOutcome> solve_bgp_batch_serial(const std::vector<ModelParams>& draws,
                                               const BgpSolveOptions& opt = {});
std::vector<BgpOutcome> solve_bgp_batch_parallel(const std::vector<ModelParams>& draws,
                                                 const BgpSolveOptions& opt = {});
std::vector<BgpOutcome> solve_bgp_batch(const std::vector<ModelParams>& draws,
                                        const BgpSolveOptions& opt = {});

// Point evaluation loop behind statics::sweep, with the same in-order
// guarantee as the batch solver.
std::vector<SweepPoint> sweep_points_serial(const ModelParams& p, SweepParam param,
                                            const std::vector<double>& grid,
                                            const BgpSolveOptions& opt);
std::vector<SweepPoint> sweep_points_parallel(const ModelParams& p, SweepParam param,
                                              const std::vector<double>& grid,
                                              const BgpSolveOptions& opt);
std::vector<SweepPoint> sweep_points(const ModelParams& p, SweepParam param,
                                     const std::vector<double>& grid,
                                     const BgpSolveOptions& opt);

}  // namespace recomb::par
