#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "recomb/dynamics.hpp"
#include "recomb/params.hpp"
#include "recomb/statics.hpp"

namespace recomb {

enum class Command { SolveBgp, Simulate, Sweep, Check };

const char* to_string(Command c);

struct SweepSpec {
    SweepParam param;
    double lo;
    double hi;
    int steps;
};

struct RunConfig {
    ModelParams params;
    Command command;
    std::optional<PriceScenario> scenario;  // Simulate
    int horizon = 200;                      // Simulate
    std::optional<SweepSpec> sweep;         // Sweep
    std::uint64_t seed = 0;                 // Check
    std::string output_dir = ".";
    double bgp_tol = 1e-10;
    double sim_tol = 1e-9;
    double a2_threshold = kDefaultA2Threshold;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parse a flat "key = value" file ('#' starts a comment, blank lines ignored).
// Unknown or duplicate keys, malformed lines, and malformed numbers are
// errors carrying the line number; a structurally fine file with invalid
// model parameters is an error listing every violated rule.
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

}  // namespace recomb
