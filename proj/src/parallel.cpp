#include "recomb/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace recomb::par {

int effective_threads() {
    int avail = 1;
#ifdef _OPENMP
    avail = omp_get_max_threads();
#else
    avail = static_cast<int>(std::thread::hardware_concurrency());
#endif
    if (avail < 1) avail = 1;
    if (const char* env = std::getenv("TOOL_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && end && *end == '\0' && parsed > 0) {
            avail = static_cast<int>(std::min<long>(avail, parsed));
        }
    }
    return avail;
}

void configure_threads_from_env() {
#ifdef _OPENMP
    omp_set_num_threads(effective_threads());
#endif
}

namespace {

signed char sign_of(double v) {
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

GridScan reduce_signs(const std::vector<signed char>& signs, double n_hi) {
    GridScan out{};
    out.points = static_cast<std::int64_t>(signs.size());
    out.n_hi = n_hi;
    out.sign_changes = 0;
    out.first_change_index = -1;
    for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
        if (signs[i] * signs[i + 1] < 0) {
            ++out.sign_changes;
            if (out.first_change_index < 0) {
                out.first_change_index = static_cast<std::int64_t>(i);
            }
        }
    }
    return out;
}

double scan_upper_bound(const ModelParams& p, std::int64_t points) {
    p.validate();
    if (points < 2) throw std::invalid_argument("scan needs at least 2 grid points");
    const double phi0 = phi_gap(0.0, p);
    if (!(phi0 > 0.0)) {
        throw NoEntryError("free entry is unprofitable even with zero competitors; "
                           "the equilibrium gap has no bracket to scan");
    }
    return phi0 + 1.0;
}

}  // namespace

GridScan phi_scan_serial(const ModelParams& p, std::int64_t points) {
    const double n_hi = scan_upper_bound(p, points);
    std::vector<signed char> signs(static_cast<std::size_t>(points));
    for (std::int64_t i = 0; i < points; ++i) {
        const double n = n_hi * static_cast<double>(i) / static_cast<double>(points - 1);
        signs[static_cast<std::size_t>(i)] = sign_of(phi_gap(n, p));
    }
    return reduce_signs(signs, n_hi);
}

GridScan phi_scan_parallel(const ModelParams& p, std::int64_t points) {
    const double n_hi = scan_upper_bound(p, points);
    std::vector<signed char> signs(static_cast<std::size_t>(points));
#ifdef _OPENMP
    const int workers = effective_threads();
#pragma omp parallel for num_threads(workers) schedule(static)
#endif
    for (std::int64_t i = 0; i < points; ++i) {
        const double n = n_hi * static_cast<double>(i) / static_cast<double>(points - 1);
        signs[static_cast<std::size_t>(i)] = sign_of(phi_gap(n, p));
    }
    return reduce_signs(signs, n_hi);
}

GridScan phi_scan(const ModelParams& p, std::int64_t points) {
#ifdef _OPENMP
    if (effective_threads() > 1) return phi_scan_parallel(p, points);
#endif
    return phi_scan_serial(p, points);
}

namespace {

BgpOutcome solve_one(const ModelParams& draw, const BgpSolveOptions& opt) {
    BgpOutcome out{};
    try {
        out.sol = solve_bgp(draw, opt);
        out.ok = true;
    } catch (const std::exception& e) {
        out.ok = false;
        out.error = e.what();
    }
    return out;
}

}  // namespace

std::vector<BgpOutcome> solve_bgp_batch_serial(const std::vector<ModelParams>& draws,
                                               const BgpSolveOptions& opt) {
    std::vector<BgpOutcome> out(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) out[i] = solve_one(draws[i], opt);
    return out;
}

std::vector<BgpOutcome> solve_bgp_batch_parallel(const std::vector<ModelParams>& draws,
                                                 const BgpSolveOptions& opt) {
    std::vector<BgpOutcome> out(draws.size());
    const std::int64_t count = static_cast<std::int64_t>(draws.size());
#ifdef _OPENMP
    const int workers = effective_threads();
#pragma omp parallel for num_threads(workers) schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] =
            solve_one(draws[static_cast<std::size_t>(i)], opt);
    }
    return out;
}

std::vector<BgpOutcome> solve_bgp_batch(const std::vector<ModelParams>& draws,
                                        const BgpSolveOptions& opt) {
#ifdef _OPENMP
    if (effective_threads() > 1) return solve_bgp_batch_parallel(draws, opt);
#endif
    return solve_bgp_batch_serial(draws, opt);
}

std::vector<SweepPoint> sweep_points_serial(const ModelParams& p, SweepParam param,
                                            const std::vector<double>& grid,
                                            const BgpSolveOptions& opt) {
    std::vector<SweepPoint> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = evaluate_sweep_point(p, param, grid[i], opt);
    }
    return out;
}

std::vector<SweepPoint> sweep_points_parallel(const ModelParams& p, SweepParam param,
                                              const std::vector<double>& grid,
                                              const BgpSolveOptions& opt) {
    std::vector<SweepPoint> out(grid.size());
    const std::int64_t count = static_cast<std::int64_t>(grid.size());
#ifdef _OPENMP
    const int workers = effective_threads();
#pragma omp parallel for num_threads(workers) schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        out[k] = evaluate_sweep_point(p, param, grid[k], opt);
    }
    return out;
}

std::vector<SweepPoint> sweep_points(const ModelParams& p, SweepParam param,
                                     const std::vector<double>& grid,
                                     const BgpSolveOptions& opt) {
#ifdef _OPENMP
    if (effective_threads() > 1) return sweep_points_parallel(p, param, grid, opt);
#endif
    return sweep_points_serial(p, param, grid, opt);
}

}  // namespace recomb::par
