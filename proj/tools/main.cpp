#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "recomb/cli.hpp"
#include "recomb/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"recomb: quality-ladder growth model with AI-assisted recombinant R&D"};

    std::string config_path;
    std::string output_dir;
    std::uint64_t seed = 0;
    bool seed_given = false;

    app.add_option("--config", config_path, "path to a key = value run configuration")
        ->required();
    app.add_option("--output-dir", output_dir,
                   "directory for the CSV outputs (overrides the config)");
    app.add_option("--seed", seed, "generator seed for check runs (overrides the config)")
        ->each([&](const std::string&) { seed_given = true; });

    CLI11_PARSE(app, argc, argv);

    recomb::RunConfig cfg;
    try {
        cfg = recomb::load_config(config_path);
    } catch (const recomb::ConfigError& e) {
        std::string one_line = e.what();
        for (char& c : one_line) {
            if (c == '\n' || c == '\r') c = ' ';
        }
        std::fprintf(stderr, "error kind=config message=%s\n", one_line.c_str());
        return recomb::kExitConfig;
    }
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (seed_given) cfg.seed = seed;

    return recomb::run(cfg);
}
