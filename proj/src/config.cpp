#include "recomb/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace recomb {

const char* to_string(Command c) {
    switch (c) {
        case Command::SolveBgp: return "solve_bgp";
        case Command::Simulate: return "simulate";
        case Command::Sweep: return "sweep";
        case Command::Check: return "check";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct Entry {
    std::string value;
    int line;
};

class KeyTable {
public:
    KeyTable(std::map<std::string, Entry> entries, std::string origin)
        : entries_(std::move(entries)), origin_(std::move(origin)) {}

    [[noreturn]] void fail(int line, const std::string& msg) const {
        std::ostringstream os;
        os << origin_ << ":" << line << ": " << msg;
        throw ConfigError(os.str());
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError(origin_ + ": " + msg);
    }

    const Entry* take(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return nullptr;
        taken_.insert({key, it->second});
        entries_.erase(it);
        auto back = taken_.find(key);
        return &back->second;
    }

    const Entry& require(const std::string& key) {
        const Entry* e = take(key);
        if (e == nullptr) fail("missing required key '" + key + "'");
        return *e;
    }

    double require_double(const std::string& key) {
        return as_double(key, require(key));
    }

    double as_double(const std::string& key, const Entry& e) const {
        const char* begin = e.value.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0') {
            fail(e.line, "key '" + key + "' needs a real number, got '" + e.value + "'");
        }
        return v;
    }

    long long as_int(const std::string& key, const Entry& e) const {
        const char* begin = e.value.c_str();
        char* end = nullptr;
        const long long v = std::strtoll(begin, &end, 10);
        if (end == begin || *end != '\0') {
            fail(e.line, "key '" + key + "' needs an integer, got '" + e.value + "'");
        }
        return v;
    }

    std::uint64_t as_uint(const std::string& key, const Entry& e) const {
        if (!e.value.empty() && e.value[0] == '-') {
            fail(e.line, "key '" + key + "' needs a nonnegative integer, got '" + e.value + "'");
        }
        const char* begin = e.value.c_str();
        char* end = nullptr;
        const unsigned long long v = std::strtoull(begin, &end, 10);
        if (end == begin || *end != '\0') {
            fail(e.line, "key '" + key + "' needs a nonnegative integer, got '" + e.value + "'");
        }
        return v;
    }

    // Every key the caller never consumed is a typo by contract.
    void reject_leftovers() const {
        if (entries_.empty()) return;
        const auto& [key, entry] = *entries_.begin();
        fail(entry.line, "unknown key '" + key + "'");
    }

private:
    std::map<std::string, Entry> entries_;
    std::map<std::string, Entry> taken_;
    std::string origin_;
};

KeyTable tokenize(const std::string& text, const std::string& origin) {
    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": expected 'key = value', got '" << line << "'";
            throw ConfigError(os.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": empty key before '='";
            throw ConfigError(os.str());
        }
        const auto [it, inserted] = entries.insert({key, Entry{value, line_no}});
        if (!inserted) {
            std::ostringstream os;
            os << origin << ":" << line_no << ": duplicate key '" << key
               << "' (first set on line " << it->second.line << ")";
            throw ConfigError(os.str());
        }
    }
    return KeyTable(std::move(entries), origin);
}

Command parse_command(KeyTable& t) {
    const Entry& e = t.require("command");
    if (e.value == "solve_bgp") return Command::SolveBgp;
    if (e.value == "simulate") return Command::Simulate;
    if (e.value == "sweep") return Command::Sweep;
    if (e.value == "check") return Command::Check;
    t.fail(e.line, "command must be one of solve_bgp | simulate | sweep | check, got '" +
                       e.value + "'");
}

PriceScenario::Kind parse_scenario_kind(KeyTable& t, const Entry& e) {
    if (e.value == "proportional") return PriceScenario::Kind::Proportional;
    if (e.value == "fast_growing") return PriceScenario::Kind::FastGrowing;
    if (e.value == "decreasing") return PriceScenario::Kind::Decreasing;
    t.fail(e.line,
           "scenario must be one of proportional | fast_growing | decreasing, got '" +
               e.value + "'");
}

SweepParam parse_sweep_param(KeyTable& t, const Entry& e) {
    if (e.value == "alpha") return SweepParam::Alpha;
    if (e.value == "m") return SweepParam::M;
    t.fail(e.line, "sweep_param must be alpha or m, got '" + e.value + "'");
}

// Default price-path rates when the config stays silent: a 5% wedge for the
// fast-growing law, a 2% decay for the decreasing one.
double default_rate(PriceScenario::Kind kind) {
    switch (kind) {
        case PriceScenario::Kind::FastGrowing: return 0.05;
        case PriceScenario::Kind::Decreasing: return 0.02;
        case PriceScenario::Kind::Proportional: return 0.0;
    }
    return 0.0;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    KeyTable t = tokenize(text, origin);
    RunConfig cfg{};

    ModelParams& p = cfg.params;
    p.alpha = t.require_double("alpha");
    p.m = t.require_double("m");
    p.phi = t.require_double("phi");
    p.kappa = t.require_double("kappa");
    p.beta = t.require_double("beta");
    p.eta = t.require_double("eta");
    p.theta = t.require_double("theta");
    p.epsilon = t.require_double("epsilon");
    p.r = t.require_double("r");
    p.mu_bar = t.require_double("mu_bar");
    p.l_bar = t.require_double("l_bar");
    p.r_bar = t.require_double("r_bar");

    cfg.command = parse_command(t);

    const Entry* scenario_key = t.take("scenario");
    const Entry* scenario_mu0 = t.take("scenario_mu0");
    const Entry* scenario_rate = t.take("scenario_rate");
    const Entry* horizon = t.take("horizon");
    const Entry* sweep_param = t.take("sweep_param");
    const Entry* sweep_lo = t.take("sweep_lo");
    const Entry* sweep_hi = t.take("sweep_hi");
    const Entry* sweep_steps = t.take("sweep_steps");
    const Entry* seed = t.take("seed");
    const Entry* output_dir = t.take("output_dir");
    const Entry* bgp_tol = t.take("bgp_tol");
    const Entry* sim_tol = t.take("sim_tol");
    const Entry* a2_threshold = t.take("a2_threshold");
    t.reject_leftovers();

    // Structure is fine; now the model box, every violation at once.
    const std::vector<std::string> violations = p.violations();
    if (!violations.empty()) {
        std::string msg = origin + ": invalid model parameters:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw ConfigError(msg);
    }

    if (seed != nullptr) cfg.seed = t.as_uint("seed", *seed);
    if (output_dir != nullptr) {
        if (output_dir->value.empty()) t.fail(output_dir->line, "output_dir is empty");
        cfg.output_dir = output_dir->value;
    }
    if (bgp_tol != nullptr) {
        cfg.bgp_tol = t.as_double("bgp_tol", *bgp_tol);
        if (!(cfg.bgp_tol > 0.0)) t.fail(bgp_tol->line, "bgp_tol must be positive");
    }
    if (sim_tol != nullptr) {
        cfg.sim_tol = t.as_double("sim_tol", *sim_tol);
        if (!(cfg.sim_tol > 0.0)) t.fail(sim_tol->line, "sim_tol must be positive");
    }
    if (a2_threshold != nullptr) {
        cfg.a2_threshold = t.as_double("a2_threshold", *a2_threshold);
        if (!(cfg.a2_threshold > 0.0)) {
            t.fail(a2_threshold->line, "a2_threshold must be positive");
        }
    }
    if (horizon != nullptr) {
        const long long h = t.as_int("horizon", *horizon);
        if (h < 1 || h > 1000000) {
            t.fail(horizon->line, "horizon must be between 1 and 1000000");
        }
        cfg.horizon = static_cast<int>(h);
    }

    if (cfg.command == Command::Simulate) {
        if (scenario_key == nullptr) {
            t.fail("command simulate needs a 'scenario' key (proportional | fast_growing | decreasing)");
        }
        PriceScenario s{};
        s.kind = parse_scenario_kind(t, *scenario_key);
        s.mu0 = scenario_mu0 != nullptr ? t.as_double("scenario_mu0", *scenario_mu0)
                                        : p.mu_bar;
        s.rate_param = scenario_rate != nullptr
                           ? t.as_double("scenario_rate", *scenario_rate)
                           : default_rate(s.kind);
        try {
            s.validate(p);
        } catch (const std::invalid_argument& e) {
            t.fail(scenario_key->line, e.what());
        }
        cfg.scenario = s;
    }

    if (cfg.command == Command::Sweep) {
        if (sweep_param == nullptr || sweep_lo == nullptr || sweep_hi == nullptr ||
            sweep_steps == nullptr) {
            t.fail("command sweep needs sweep_param, sweep_lo, sweep_hi and sweep_steps");
        }
        SweepSpec spec{};
        spec.param = parse_sweep_param(t, *sweep_param);
        spec.lo = t.as_double("sweep_lo", *sweep_lo);
        spec.hi = t.as_double("sweep_hi", *sweep_hi);
        const long long steps = t.as_int("sweep_steps", *sweep_steps);
        if (!(spec.lo < spec.hi)) {
            t.fail(sweep_hi->line, "sweep grid needs sweep_lo < sweep_hi");
        }
        if (steps < 2 || steps > 10000000) {
            t.fail(sweep_steps->line, "sweep_steps must be between 2 and 10000000");
        }
        spec.steps = static_cast<int>(steps);
        cfg.sweep = spec;
    }

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ConfigError("cannot read config file: " + path);
    return parse_config_text(buf.str(), path);
}

}  // namespace recomb
