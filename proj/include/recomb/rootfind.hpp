#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace recomb {

struct NonConvergenceError : std::runtime_error {
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct BisectOptions {
    double f_tol = 1e-12;    // stop when |f(mid)| drops below this
    double x_rel_tol = 0.0;  // optional: stop when the bracket is this narrow (relative)
    int max_iter = 200;
    // After this many plain bisection steps, switch to false-position updates
    // inside the bracket (faster, still bracketed). < 0 disables.
    int secant_after = -1;
};

/// Root of f on [lo, hi]; requires f(lo) and f(hi) of opposite sign
/// (std::invalid_argument otherwise). Plain bisection by default; converges
/// on |f| < f_tol, on bracket width, or on the floating-point width floor.
/// Throws NonConvergenceError if max_iter steps pass none of those.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const BisectOptions& opt = {});

}  // namespace recomb
