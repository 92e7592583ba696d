#include "recomb/rootfind.hpp"

#include <cmath>
#include <sstream>

namespace recomb {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const BisectOptions& opt) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) {
        std::ostringstream os;
        os << "root not bracketed: f(" << lo << ") = " << flo << ", f(" << hi << ") = " << fhi;
        throw std::invalid_argument(os.str());
    }

    for (int it = 0; it < opt.max_iter; ++it) {
        double mid;
        if (opt.secant_after >= 0 && it >= opt.secant_after && fhi != flo) {
            // False position inside the bracket; fall back to the midpoint if
            // the interpolate degenerates onto an endpoint.
            mid = lo + (hi - lo) * (-flo / (fhi - flo));
            if (!(mid > std::min(lo, hi)) || !(mid < std::max(lo, hi))) {
                mid = 0.5 * (lo + hi);
            }
        } else {
            mid = 0.5 * (lo + hi);
        }
        if (mid == lo || mid == hi) return mid;  // interval at the width floor
        const double fm = f(mid);
        if (std::abs(fm) < opt.f_tol) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if (opt.x_rel_tol > 0.0 &&
            std::abs(hi - lo) < opt.x_rel_tol * std::max(std::abs(lo), std::abs(hi))) {
            return 0.5 * (lo + hi);
        }
    }
    std::ostringstream os;
    os << "bisection did not converge in " << opt.max_iter << " iterations on ["
       << lo << ", " << hi << "]";
    throw NonConvergenceError(os.str());
}

}  // namespace recomb
