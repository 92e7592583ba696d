#include "recomb/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "recomb/statics.hpp"

namespace recomb::csv {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

namespace {

void echo(std::ostringstream& os, const char* key, const std::string& value) {
    os << "# " << key << " = " << value << "\n";
}

void echo(std::ostringstream& os, const char* key, double value) {
    echo(os, key, fmt(value));
}

}  // namespace

std::string config_preamble(const RunConfig& cfg) {
    std::ostringstream os;
    const ModelParams& p = cfg.params;
    echo(os, "alpha", p.alpha);
    echo(os, "m", p.m);
    echo(os, "phi", p.phi);
    echo(os, "kappa", p.kappa);
    echo(os, "beta", p.beta);
    echo(os, "eta", p.eta);
    echo(os, "theta", p.theta);
    echo(os, "epsilon", p.epsilon);
    echo(os, "r", p.r);
    echo(os, "mu_bar", p.mu_bar);
    echo(os, "l_bar", p.l_bar);
    echo(os, "r_bar", p.r_bar);
    echo(os, "command", to_string(cfg.command));
    if (cfg.scenario.has_value()) {
        echo(os, "scenario", to_string(cfg.scenario->kind));
        echo(os, "scenario_mu0", cfg.scenario->mu0);
        echo(os, "scenario_rate", cfg.scenario->rate_param);
        echo(os, "horizon", std::to_string(cfg.horizon));
        echo(os, "sim_tol", cfg.sim_tol);
    }
    if (cfg.sweep.has_value()) {
        echo(os, "sweep_param", cfg.sweep->param == SweepParam::Alpha ? "alpha" : "m");
        echo(os, "sweep_lo", cfg.sweep->lo);
        echo(os, "sweep_hi", cfg.sweep->hi);
        echo(os, "sweep_steps", std::to_string(cfg.sweep->steps));
    }
    if (cfg.command == Command::Check) {
        echo(os, "seed", std::to_string(cfg.seed));
    }
    echo(os, "bgp_tol", cfg.bgp_tol);
    echo(os, "a2_threshold", cfg.a2_threshold);
    return os.str();
}

std::string bgp_csv(const RunConfig& cfg, const BgpSolution& sol) {
    const ModelParams& p = cfg.params;
    std::string out = config_preamble(cfg);
    out +=
        "alpha,m,phi,kappa,beta,eta,theta,epsilon,r,mu_bar,l_bar,r_bar,"
        "n_star,d_star,growth,arrival_flow,jacobian_det,a1,a2,a3,phi_residual\n";
    const double cells[] = {p.alpha, p.m,     p.phi,  p.kappa,  p.beta, p.eta,
                            p.theta, p.epsilon, p.r,  p.mu_bar, p.l_bar, p.r_bar,
                            sol.n_star, sol.d_star, sol.growth_per_innovation,
                            sol.arrival_flow, sol.jacobian_det};
    for (double c : cells) {
        out += fmt(c);
        out += ',';
    }
    out += sol.assumptions.a1 ? "1," : "0,";
    out += sol.assumptions.a2 ? "1," : "0,";
    out += sol.assumptions.a3 ? "1," : "0,";
    out += fmt(sol.phi_residual);
    out += '\n';
    return out;
}

std::string path_csv(const RunConfig& cfg, const ScenarioPath& path) {
    std::string out = config_preamble(cfg);
    out += "t,a,w,mu,n,d,growth_per_period,arrival_flow,converged\n";
    for (std::size_t i = 0; i < path.states.size(); ++i) {
        const EconomyState& s = path.states[i];
        out += std::to_string(s.t);
        out += ',';
        out += fmt(s.a);
        out += ',';
        out += fmt(s.w);
        out += ',';
        out += fmt(s.mu);
        out += ',';
        out += fmt(s.n);
        out += ',';
        out += fmt(s.d);
        out += ',';
        out += fmt(path.growth_rates[i]);
        out += ',';
        out += fmt(path.arrival_flows[i]);
        out += ',';
        out += path.converged_flags[i] ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const RunConfig& cfg, const SweepResult& result) {
    std::string out = config_preamble(cfg);
    out += "param_value,n_star,d_star,dd_dm,dn_dm,dd_dalpha,dn_dalpha,alpha_c,region\n";
    for (const SweepPoint& pt : result.points) {
        out += fmt(pt.value);
        out += ',';
        if (pt.ok) {
            const double cells[] = {pt.sol.n_star,      pt.sol.d_star,
                                    pt.statics.dd_dm,    pt.statics.dn_dm,
                                    pt.statics.dd_dalpha, pt.statics.dn_dalpha,
                                    pt.statics.alpha_c};
            for (double c : cells) {
                out += fmt(c);
                out += ',';
            }
            out += to_string(pt.statics.region);
        } else {
            // Solver failures keep their grid row so downstream plots stay
            // aligned; numeric cells go empty, the region cell says why not.
            out += ",,,,,,,failed";
        }
        out += '\n';
    }
    return out;
}

std::string check_csv(const RunConfig& cfg, const check::CheckSuiteResult& result) {
    return config_preamble(cfg) + check::to_csv(result);
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::error_code ec;
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + target.parent_path().string() +
                          ": " + ec.message());
        }
    }
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace recomb::csv
