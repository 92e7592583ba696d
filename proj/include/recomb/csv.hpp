#pragma once

#include <cstdint>
#include <string>

#include "recomb/bgp.hpp"
#include "recomb/check.hpp"
#include "recomb/config.hpp"
#include "recomb/dynamics.hpp"
#include "recomb/statics.hpp"

namespace recomb::csv {

// Output-side failures (unwritable directory, full disk) carry their own type
// so the front end can map them to the io exit code rather than the solver one.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// 17 significant digits: enough for exact double round-trips, and the same
// bytes on every run of the same build (C locale, no wall-clock anywhere).
std::string fmt(double v);
std::string fmt(std::int64_t v);

// '#'-comment preamble echoing the canonical config, so every file is
// self-describing.
std::string config_preamble(const RunConfig& cfg);

std::string bgp_csv(const RunConfig& cfg, const BgpSolution& sol);
std::string path_csv(const RunConfig& cfg, const ScenarioPath& path);
std::string sweep_csv(const RunConfig& cfg, const SweepResult& result);
std::string check_csv(const RunConfig& cfg, const check::CheckSuiteResult& result);

void write_file(const std::string& path, const std::string& content);

}  // namespace recomb::csv
