#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace qaoaws {

// Exit codes shared by the command layer and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSizeGuard = 2;
inline constexpr int kExitVerifyFailed = 3;

enum class Command {
    simulate,
    bounds,
    sweep_theta,
    toy,
    verify,
};

/// One experiment description: instance source, warm-start source, depths,
/// target delta-lambda, theta grid, optimizer budget, seed, output directory.
struct ExperimentConfig {
    Command command = Command::verify;

    // instance source (exactly one for simulate/bounds/sweep-theta)
    std::string graph_path;
    std::string objective_path;
    bool toy_instance = false;

    // warm-start source
    std::string bitstring;      // with theta: an at-theta warm start
    std::string warmstart_path; // JSON angle file
    double theta = -1.0;        // single theta (simulate); < 0 means unset

    std::vector<double> theta_grid; // defaults to kDefaultThetaGrid when empty

    int depth_min = 1;
    int depth_max = 4;

    double delta_lambda = 0.5;

    // fixed parameters for simulate; empty means optimize. A single value is
    // broadcast to all layers.
    std::vector<double> gammas;
    std::vector<double> betas;

    std::string mixer = "aligned"; // "aligned" | "tf"
    long budget = 2000;
    std::uint64_t seed = 42;
    std::string out_dir = ".";
};

std::vector<double> default_theta_grid();

/// Applies the values found in a JSON config document on top of `base`
/// (the command itself always comes from the command line).
ExperimentConfig apply_config_json(ExperimentConfig base, std::string_view json_text);

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log);
int cmd_bounds(const ExperimentConfig& cfg, std::ostream& log);
int cmd_sweep_theta(const ExperimentConfig& cfg, std::ostream& log);
int cmd_toy(const ExperimentConfig& cfg, std::ostream& log);
int cmd_verify(const ExperimentConfig& cfg, std::ostream& log);

/// Dispatches on cfg.command and maps thrown errors onto exit codes
/// (parse/usage -> 1, size guards -> 2, failed verification/audit -> 3).
int run_command(const ExperimentConfig& cfg, std::ostream& log);

} // namespace qaoaws
