#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "recomb/parallel.hpp"
#include "recomb/params.hpp"
#include "recomb/statics.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void print_row(const char* kernel, double serial_s, double parallel_s, bool identical) {
    std::printf("%-18s %10.3f s %12.3f s %9.2fx   %s\n", kernel, serial_s, parallel_s,
                serial_s / parallel_s, identical ? "identical" : "MISMATCH");
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

int main() {
    using namespace recomb;
    par::configure_threads_from_env();
    std::printf("workers: %d\n\n", par::effective_threads());
    std::printf("%-18s %12s %14s %10s\n", "kernel", "serial", "parallel", "speedup");

    const ModelParams base = default_params();

    // Sign scan of the equilibrium gap over a fine grid.
    {
        const std::int64_t points = 20000000;
        auto t0 = Clock::now();
        const par::GridScan s = par::phi_scan_serial(base, points);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const par::GridScan q = par::phi_scan_parallel(base, points);
        const double tp = seconds_since(t0);
        const bool identical = s.sign_changes == q.sign_changes &&
                               s.first_change_index == q.first_change_index &&
                               same(s.n_hi, q.n_hi);
        print_row("phi_scan", ts, tp, identical);
    }

    // Batch equilibrium solves over independent perturbations of the default.
    {
        std::mt19937_64 eng(12345);
        const auto unif = [&](double lo, double hi) {
            return lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
        };
        std::vector<ModelParams> draws(20000, base);
        for (ModelParams& p : draws) {
            p.alpha = unif(0.15, 0.5);
            p.m = unif(1.8, 5.0);
            p.beta = unif(0.3, 0.9);
        }
        auto t0 = Clock::now();
        const auto s = par::solve_bgp_batch_serial(draws);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto q = par::solve_bgp_batch_parallel(draws);
        const double tp = seconds_since(t0);
        bool identical = s.size() == q.size();
        for (std::size_t i = 0; identical && i < s.size(); ++i) {
            identical = s[i].ok == q[i].ok && s[i].error == q[i].error &&
                        same(s[i].sol.n_star, q[i].sol.n_star) &&
                        same(s[i].sol.d_star, q[i].sol.d_star);
        }
        print_row("solve_bgp_batch", ts, tp, identical);
    }

    // Comparative-statics sweep points (solve + differentiate per point).
    {
        const int points = 2000;
        std::vector<double> grid(points);
        for (int i = 0; i < points; ++i) {
            grid[static_cast<std::size_t>(i)] =
                0.1 + (0.6 - 0.1) * i / static_cast<double>(points - 1);
        }
        const BgpSolveOptions opt;
        auto t0 = Clock::now();
        const auto s = par::sweep_points_serial(base, SweepParam::Alpha, grid, opt);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto q = par::sweep_points_parallel(base, SweepParam::Alpha, grid, opt);
        const double tp = seconds_since(t0);
        bool identical = s.size() == q.size();
        for (std::size_t i = 0; identical && i < s.size(); ++i) {
            identical = s[i].ok == q[i].ok && same(s[i].sol.n_star, q[i].sol.n_star) &&
                        same(s[i].statics.dd_dalpha, q[i].statics.dd_dalpha) &&
                        same(s[i].statics.dn_dalpha, q[i].statics.dn_dalpha);
        }
        print_row("sweep_points", ts, tp, identical);
    }

    return 0;
}
