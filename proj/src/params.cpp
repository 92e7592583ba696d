#include "recomb/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace recomb {

namespace {

void require_open_unit(std::vector<std::string>& out, const char* name, double v) {
    if (!(v > 0.0) || !(v < 1.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must lie strictly inside (0, 1); got " << v;
        out.push_back(os.str());
    }
}

void require_positive(std::vector<std::string>& out, const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be a positive real; got " << v;
        out.push_back(os.str());
    }
}

}  // namespace

std::vector<std::string> ModelParams::violations() const {
    std::vector<std::string> out;
    require_open_unit(out, "alpha", alpha);
    if (!(m > 1.0) || !std::isfinite(m)) {
        std::ostringstream os;
        os << "m must exceed 1 (AI at least as productive as labor, strictly); got " << m;
        out.push_back(os.str());
    }
    require_open_unit(out, "phi", phi);
    require_open_unit(out, "kappa", kappa);
    require_positive(out, "beta", beta);
    require_open_unit(out, "eta", eta);
    require_open_unit(out, "theta", theta);
    require_open_unit(out, "epsilon", epsilon);
    require_positive(out, "r", r);
    require_positive(out, "mu_bar", mu_bar);
    require_positive(out, "l_bar", l_bar);
    if (r_bar != 1.0) {
        std::ostringstream os;
        os << "r_bar is the radius normalization and must equal 1; got " << r_bar;
        out.push_back(os.str());
    }
    return out;
}

void ModelParams::validate() const {
    auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid model parameters:";
    for (const auto& line : v) msg += "\n  - " + line;
    throw std::invalid_argument(msg);
}

DerivedConstants derived_constants(const ModelParams& p) {
    // Products of powers are assembled from logs so extreme parameter draws
    // cannot underflow partway through.
    const double log_iota = (p.epsilon - 1.0) * std::log(p.l_bar) + 2.0 * std::log(p.epsilon);
    const double log_xi = std::log1p(-p.epsilon) +
                          (1.0 + p.epsilon) / (1.0 - p.epsilon) * std::log(p.epsilon) -
                          p.epsilon / (1.0 - p.epsilon) * log_iota;
    const double log_gamma = -p.alpha * std::log(p.alpha) -
                             (1.0 - p.alpha) * std::log1p(-p.alpha) +
                             (1.0 - p.alpha) * log_iota + p.alpha * std::log(p.mu_bar) -
                             p.alpha * std::log(p.m);
    const double log_lambda = p.phi * std::log(p.m) + p.kappa * std::log(p.alpha) +
                              (1.0 - p.kappa) * std::log1p(-p.alpha);
    return DerivedConstants{std::exp(log_iota), std::exp(log_xi), std::exp(log_gamma),
                            std::exp(log_lambda)};
}

ModelParams default_params() {
    ModelParams p{};
    p.alpha = 0.3;
    p.m = 3.0;
    p.phi = 0.5;
    p.kappa = 0.6;
    p.beta = 0.5;
    p.eta = 0.6;
    p.theta = 0.8;
    p.epsilon = 0.4;
    p.r = 0.05;
    p.mu_bar = 1.0;
    p.l_bar = 1.0;
    p.r_bar = 1.0;
    return p;
}

}  // namespace recomb
