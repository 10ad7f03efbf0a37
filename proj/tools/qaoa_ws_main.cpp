// qaoa-ws: warm-started QAOA simulation and depth lower bounds.
//
// Subcommands: simulate | bounds | sweep-theta | toy | verify.
// Flags may also come from a JSON config file (--config); explicit flags win.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qaoaws/errors.hpp"
#include "qaoaws/experiments.hpp"

namespace {

struct RawArgs {
    std::string config_path;
    std::string graph_path;
    std::string objective_path;
    bool toy_instance = false;
    std::string bitstring;
    std::string warmstart_path;
    double theta = -1.0;
    std::vector<double> theta_grid;
    int depth = -1;
    std::string depth_range;
    double delta_lambda = -1.0;
    std::vector<double> gammas;
    std::vector<double> betas;
    std::string mixer;
    long budget = -1;
    std::uint64_t seed = 0;
    std::string out_dir;
};

void add_common_flags(CLI::App* cmd, RawArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file; flags override it");
    cmd->add_option("--graph", args.graph_path, "edge-list instance file");
    cmd->add_option("--objective", args.objective_path, "JSON objective-table instance file");
    cmd->add_flag("--toy", args.toy_instance, "use the built-in single-qubit toy instance");
    cmd->add_option("--bitstring", args.bitstring, "warm-start bitstring (with --theta)");
    cmd->add_option("--warmstart", args.warmstart_path, "warm-start JSON angle file");
    cmd->add_option("--theta", args.theta, "initialization angle in [0, pi/2]");
    cmd->add_option("--theta-grid", args.theta_grid, "comma-separated theta grid")
        ->delimiter(',');
    cmd->add_option("--depth", args.depth, "single circuit depth p");
    cmd->add_option("--depth-range", args.depth_range, "depth range A..B");
    cmd->add_option("--delta-lambda", args.delta_lambda, "target approximation-ratio change");
    cmd->add_option("--gamma", args.gammas, "fixed gamma value(s); 1 value broadcasts")
        ->delimiter(',');
    cmd->add_option("--beta", args.betas, "fixed beta value(s); 1 value broadcasts")
        ->delimiter(',');
    cmd->add_option("--mixer", args.mixer, "mixer for simulate: aligned (default) or tf");
    cmd->add_option("--budget", args.budget, "optimizer refinement evaluations");
    cmd->add_option("--seed", args.seed, "random seed");
    cmd->add_option("--out", args.out_dir, "output directory");
}

std::pair<int, int> parse_depth_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw CLI::ValidationError("--depth-range", "expected A..B");
    }
    try {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--depth-range", "expected A..B with integer bounds");
    }
}

qaoaws::ExperimentConfig build_config(const CLI::App* cmd, const RawArgs& args,
                                      qaoaws::Command command) {
    qaoaws::ExperimentConfig cfg;
    cfg.command = command;

    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path, std::ios::binary);
        if (!in) {
            throw qaoaws::ParseError("cannot open config '" + args.config_path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        cfg = qaoaws::apply_config_json(std::move(cfg), buffer.str());
        cfg.command = command;
    }

    auto seen = [&](const std::string& flag) { return cmd->count(flag) > 0; };
    if (seen("--graph")) cfg.graph_path = args.graph_path;
    if (seen("--objective")) cfg.objective_path = args.objective_path;
    if (seen("--toy")) cfg.toy_instance = args.toy_instance;
    if (seen("--bitstring")) cfg.bitstring = args.bitstring;
    if (seen("--warmstart")) cfg.warmstart_path = args.warmstart_path;
    if (seen("--theta")) cfg.theta = args.theta;
    if (seen("--theta-grid")) cfg.theta_grid = args.theta_grid;
    if (seen("--depth")) cfg.depth_min = cfg.depth_max = args.depth;
    if (seen("--depth-range")) {
        std::tie(cfg.depth_min, cfg.depth_max) = parse_depth_range(args.depth_range);
    }
    if (seen("--delta-lambda")) cfg.delta_lambda = args.delta_lambda;
    if (seen("--gamma")) cfg.gammas = args.gammas;
    if (seen("--beta")) cfg.betas = args.betas;
    if (seen("--mixer")) cfg.mixer = args.mixer;
    if (seen("--budget")) cfg.budget = args.budget;
    if (seen("--seed")) cfg.seed = args.seed;
    if (seen("--out")) cfg.out_dir = args.out_dir;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Warm-started QAOA statevector simulation and circuit-depth lower bounds"};
    app.require_subcommand(1);

    RawArgs args;
    CLI::App* simulate = app.add_subcommand("simulate", "run depth-p circuits, write runs.csv");
    CLI::App* bounds = app.add_subcommand("bounds", "depth lower bounds, write bounds.csv");
    CLI::App* sweep = app.add_subcommand(
        "sweep-theta", "bounds + optimized runs over a theta grid, write sweep.csv/sweep.svg");
    CLI::App* toy = app.add_subcommand("toy", "single-qubit closed-form model, write toy.csv");
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite, exit 0 iff all pass");
    for (CLI::App* cmd : {simulate, bounds, sweep, toy, verify}) {
        add_common_flags(cmd, args);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? qaoaws::kExitOk : qaoaws::kExitUsage;
    }

    try {
        qaoaws::Command command = qaoaws::Command::verify;
        const CLI::App* active = verify;
        if (simulate->parsed()) {
            command = qaoaws::Command::simulate;
            active = simulate;
        } else if (bounds->parsed()) {
            command = qaoaws::Command::bounds;
            active = bounds;
        } else if (sweep->parsed()) {
            command = qaoaws::Command::sweep_theta;
            active = sweep;
        } else if (toy->parsed()) {
            command = qaoaws::Command::toy;
            active = toy;
        }
        const qaoaws::ExperimentConfig cfg = build_config(active, args, command);
        return qaoaws::run_command(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qaoaws::kExitUsage;
    }
}
