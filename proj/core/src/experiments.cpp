#include "qaoaws/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>

#include <json.hpp>

#include "qaoaws/bounds.hpp"
#include "qaoaws/csv.hpp"
#include "qaoaws/errors.hpp"
#include "qaoaws/optimize.hpp"
#include "qaoaws/svg.hpp"
#include "qaoaws/toy_model.hpp"
#include "qaoaws/verify.hpp"

namespace qaoaws {

namespace {

constexpr double kPi = std::numbers::pi;

// The built-in toy instance runs its phase layer on the Z substitute while
// measuring against c(x) = x.
const std::int64_t kZDiagonal[2] = {1, -1};

struct Instance {
    Objective obj;
    bool is_toy = false;

    std::span<const std::int64_t> phase() const {
        return is_toy ? std::span<const std::int64_t>(kZDiagonal) : cost_diagonal(obj);
    }
};

Instance load_instance(const ExperimentConfig& cfg) {
    const int sources = static_cast<int>(!cfg.graph_path.empty()) +
                        static_cast<int>(!cfg.objective_path.empty()) +
                        static_cast<int>(cfg.toy_instance);
    if (sources != 1) {
        throw InvalidInputError(
            "exactly one instance source is required (--graph, --objective or --toy)");
    }
    if (cfg.toy_instance) {
        return {toy_objective(), true};
    }
    if (!cfg.graph_path.empty()) {
        return {maxcut_objective(load_graph(cfg.graph_path)), false};
    }
    return {load_objective_table(cfg.objective_path), false};
}

std::optional<WarmStart> resolve_warmstart(const ExperimentConfig& cfg, int n) {
    if (!cfg.warmstart_path.empty()) {
        WarmStart ws = load_warmstart(cfg.warmstart_path);
        if (ws.num_qubits() != n) {
            throw InvalidInputError("warm start qubit count does not match the instance");
        }
        return ws;
    }
    if (!cfg.bitstring.empty()) {
        if (cfg.theta < 0.0) {
            throw InvalidInputError("--bitstring needs --theta");
        }
        if (static_cast<int>(cfg.bitstring.size()) != n) {
            throw InvalidInputError("bitstring length does not match the instance");
        }
        return WarmStart::from_bitstring(cfg.bitstring, cfg.theta);
    }
    if (cfg.theta >= 0.0) {
        return WarmStart::from_bitstring(std::string(static_cast<std::size_t>(n), '0'), cfg.theta);
    }
    return std::nullopt;
}

std::string default_bits(const ExperimentConfig& cfg, int n) {
    if (cfg.bitstring.empty()) {
        return std::string(static_cast<std::size_t>(n), '0');
    }
    if (static_cast<int>(cfg.bitstring.size()) != n) {
        throw InvalidInputError("bitstring length does not match the instance");
    }
    return cfg.bitstring;
}

std::vector<double> theta_grid_of(const ExperimentConfig& cfg, bool allow_zero) {
    std::vector<double> grid = cfg.theta_grid;
    if (grid.empty()) {
        grid = cfg.theta >= 0.0 ? std::vector<double>{cfg.theta} : default_theta_grid();
    }
    for (double theta : grid) {
        if (!std::isfinite(theta) || theta < 0.0 || theta > kPi / 2.0 ||
            (!allow_zero && theta == 0.0)) {
            throw InvalidInputError("theta grid values must lie in " +
                                    std::string(allow_zero ? "[0, pi/2]" : "(0, pi/2]"));
        }
    }
    return grid;
}

void check_depth_range(const ExperimentConfig& cfg, int min_allowed) {
    if (cfg.depth_min < min_allowed || cfg.depth_max < cfg.depth_min) {
        throw InvalidInputError("bad depth range");
    }
}

std::vector<double> broadcast_params(const std::vector<double>& values, int p, const char* name) {
    if (static_cast<int>(values.size()) == p) {
        return values;
    }
    if (values.size() == 1) {
        return std::vector<double>(static_cast<std::size_t>(p), values[0]);
    }
    if (values.empty() && p == 0) {
        return {};
    }
    throw InvalidInputError(std::string(name) + " needs 1 or p values");
}

std::string join_formatted(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_double(values[i]);
    }
    return out;
}

std::ofstream open_output(const ExperimentConfig& cfg, const std::string& name) {
    const std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write '" + (dir / name).string() + "'");
    }
    return out;
}

// Fixed worker pool; results are keyed by task index, so the output order
// never depends on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace

std::vector<double> default_theta_grid() {
    return {0.025, 0.05, 0.1, 0.2, 0.4, kPi / 4.0, kPi / 2.0};
}

ExperimentConfig apply_config_json(ExperimentConfig base, std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid config JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("config must be a JSON object");
    }

    auto number_list = [](const nlohmann::json& v, const char* what) {
        std::vector<double> out;
        if (v.is_number()) {
            out.push_back(v.get<double>());
            return out;
        }
        if (!v.is_array()) {
            throw ParseError(std::string("config field '") + what +
                             "' must be a number or an array of numbers");
        }
        for (const auto& x : v) {
            if (!x.is_number()) {
                throw ParseError(std::string("config field '") + what + "' must hold numbers");
            }
            out.push_back(x.get<double>());
        }
        return out;
    };

    for (const auto& [key, value] : doc.items()) {
        if (key == "graph") {
            base.graph_path = value.get<std::string>();
        } else if (key == "objective") {
            base.objective_path = value.get<std::string>();
        } else if (key == "toy") {
            base.toy_instance = value.get<bool>();
        } else if (key == "bitstring") {
            base.bitstring = value.get<std::string>();
        } else if (key == "warmstart") {
            base.warmstart_path = value.get<std::string>();
        } else if (key == "theta") {
            base.theta = value.get<double>();
        } else if (key == "theta_grid") {
            base.theta_grid = number_list(value, "theta_grid");
        } else if (key == "depth") {
            base.depth_min = base.depth_max = value.get<int>();
        } else if (key == "depth_range") {
            if (!value.is_array() || value.size() != 2) {
                throw ParseError("config field 'depth_range' must be [min, max]");
            }
            base.depth_min = value[0].get<int>();
            base.depth_max = value[1].get<int>();
        } else if (key == "delta_lambda") {
            base.delta_lambda = value.get<double>();
        } else if (key == "gamma") {
            base.gammas = number_list(value, "gamma");
        } else if (key == "beta") {
            base.betas = number_list(value, "beta");
        } else if (key == "mixer") {
            base.mixer = value.get<std::string>();
        } else if (key == "budget") {
            base.budget = value.get<long>();
        } else if (key == "seed") {
            base.seed = value.get<std::uint64_t>();
        } else if (key == "out") {
            base.out_dir = value.get<std::string>();
        } else {
            throw ParseError("unknown config field '" + key + "'");
        }
    }
    return base;
}

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& log) {
    const Instance inst = load_instance(cfg);
    const int n = inst.obj.num_bits;
    check_depth_range(cfg, 0);

    const auto ws = resolve_warmstart(cfg, n);
    const Statevector init =
        ws ? to_statevector(*ws) : Statevector::uniform_superposition(n);
    MixerSpec mixer;
    if (cfg.mixer == "tf" || !ws) {
        mixer = transverse_field_mixer(n);
    } else if (cfg.mixer == "aligned") {
        mixer = aligned_mixer(*ws);
    } else {
        throw InvalidInputError("mixer must be 'aligned' or 'tf'");
    }

    const double theta_col = ws ? ws->max_theta_hat() : kPi / 2.0;
    const double lambda_i =
        lambda_of(expectation_diag(init, cost_diagonal(inst.obj)), inst.obj.c_max);

    auto out = open_output(cfg, "runs.csv");
    CsvWriter csv(out);
    csv.cell("n").cell("theta").cell("p").cell("gamma*").cell("beta*").cell("expectation")
        .cell("lambda_i").cell("lambda_f").cell("delta_lambda").cell("optimizer_evals")
        .cell("seed");
    csv.end_row();

    const bool fixed = !cfg.gammas.empty() || !cfg.betas.empty();
    for (int p = cfg.depth_min; p <= cfg.depth_max; ++p) {
        QaoaResult result{Statevector(1), 0, 0, {}, 0};
        if (fixed || p == 0) {
            QaoaParams params{p, broadcast_params(cfg.gammas, p, "gamma"),
                              broadcast_params(cfg.betas, p, "beta")};
            result = run_qaoa_with_phase(inst.obj, inst.phase(), init, mixer, params);
        } else {
            result = optimize_params_with_phase(inst.obj, inst.phase(), init, mixer, p,
                                                cfg.budget, cfg.seed);
        }
        csv.cell(n).cell(theta_col).cell(p).cell(join_formatted(result.params.gammas))
            .cell(join_formatted(result.params.betas)).cell(result.expectation).cell(lambda_i)
            .cell(result.lambda).cell(result.lambda - lambda_i).cell(result.evaluations)
            .cell(cfg.seed);
        csv.end_row();
    }
    log << "wrote " << (std::filesystem::path(cfg.out_dir) / "runs.csv").string() << "\n";
    return kExitOk;
}

int cmd_bounds(const ExperimentConfig& cfg, std::ostream& log) {
    const Instance inst = load_instance(cfg);
    const int n = inst.obj.num_bits;
    const auto sep = PhaseSeparator::from_objective(inst.obj);
    const auto grid = theta_grid_of(cfg, /*allow_zero=*/true);
    const std::string bits = default_bits(cfg, n);
    const double f = f_of_c(sep);

    auto out = open_output(cfg, "bounds.csv");
    CsvWriter csv(out);
    csv.cell("theta").cell("mixer_kind").cell("commutator_norm").cell("p_min").cell("finite")
        .cell("f_of_c").cell("within_theta_lower");
    csv.end_row();

    const DepthBound tf = pmin(cfg.delta_lambda, sep,
                               mixer_dense(transverse_field_mixer(n, true), n),
                               "transverse-field-shifted");
    csv.cell(kPi / 2.0).cell(tf.mixer_kind).cell(tf.commutator_norm).cell(tf.p_min)
        .cell(tf.finite).cell(f).cell(within_theta_lower(cfg.delta_lambda, kPi / 2.0, f));
    csv.end_row();

    for (double theta : grid) {
        const WarmStart ws = WarmStart::from_bitstring(bits, theta);
        const DepthBound bound =
            pmin(cfg.delta_lambda, sep, mixer_dense(aligned_mixer(ws, true), n),
                 "aligned-shifted");
        csv.cell(theta).cell(bound.mixer_kind).cell(bound.commutator_norm).cell(bound.p_min)
            .cell(bound.finite).cell(f)
            .cell(within_theta_lower(cfg.delta_lambda, theta, f));
        csv.end_row();
    }
    log << "wrote " << (std::filesystem::path(cfg.out_dir) / "bounds.csv").string() << "\n";
    return kExitOk;
}

namespace {

struct SweepRow {
    double theta = 0.0;
    DepthBound bound;
    int p = 0;
    double lambda_i = 0.0;
    double lambda_f = 0.0;
    double achieved_delta = 0.0;
    double bound_from_run = 0.0;
    bool audit_pass = true;
    long evaluations = 0;
};

} // namespace

int cmd_sweep_theta(const ExperimentConfig& cfg, std::ostream& log) {
    const Instance inst = load_instance(cfg);
    const int n = inst.obj.num_bits;
    check_depth_range(cfg, 1);
    const auto sep = PhaseSeparator::from_objective(inst.obj);
    const auto grid = theta_grid_of(cfg, /*allow_zero=*/false);
    const std::string bits = default_bits(cfg, n);
    const double f = f_of_c(sep);
    const int depths = cfg.depth_max - cfg.depth_min + 1;

    // worker pool over theta; each task fills its own slot
    std::vector<std::vector<SweepRow>> per_theta(grid.size());
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    parallel_for(grid.size(), [&](std::size_t ti) {
        try {
            const double theta = grid[ti];
            const WarmStart ws = WarmStart::from_bitstring(bits, theta);
            const Statevector init = to_statevector(ws);
            const MixerSpec mixer = aligned_mixer(ws);
            const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(ws, true), n);
            const DepthBound bound =
                pmin(cfg.delta_lambda, sep, h0, "aligned-shifted");
            const double lambda_i =
                lambda_of(expectation_diag(init, cost_diagonal(inst.obj)), inst.obj.c_max);

            std::vector<SweepRow> rows;
            rows.reserve(static_cast<std::size_t>(depths));
            for (int p = cfg.depth_min; p <= cfg.depth_max; ++p) {
                const QaoaResult run =
                    optimize_params(inst.obj, init, mixer, p, cfg.budget, cfg.seed);
                SweepRow row;
                row.theta = theta;
                row.bound = bound;
                row.p = p;
                row.lambda_i = lambda_i;
                row.lambda_f = run.lambda;
                row.achieved_delta = run.lambda - lambda_i;
                row.bound_from_run = theorem_bound(run.final_state, h0, row.achieved_delta, sep);
                const DepthBound achieved =
                    pmin(row.achieved_delta, sep, h0, "aligned-shifted", true);
                row.audit_pass = static_cast<double>(p) + 1e-9 >= row.bound_from_run &&
                                 static_cast<double>(p) + 1e-9 >= achieved.p_min;
                row.evaluations = run.evaluations;
                if (!row.audit_pass) {
                    failed = true;
                }
                rows.push_back(std::move(row));
            }
            per_theta[ti] = std::move(rows);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    });
    if (error) {
        std::rethrow_exception(error);
    }

    auto out = open_output(cfg, "sweep.csv");
    CsvWriter csv(out);
    csv.cell("theta").cell("commutator_norm").cell("p_min").cell("finite").cell("f_of_c")
        .cell("within_theta_lower").cell("p").cell("lambda_i").cell("lambda_f")
        .cell("achieved_delta_lambda").cell("theorem_bound").cell("audit_pass")
        .cell("optimizer_evals").cell("seed");
    csv.end_row();
    for (const auto& rows : per_theta) {
        for (const auto& row : rows) {
            csv.cell(row.theta).cell(row.bound.commutator_norm).cell(row.bound.p_min)
                .cell(row.bound.finite).cell(f)
                .cell(within_theta_lower(cfg.delta_lambda, row.theta, f)).cell(row.p)
                .cell(row.lambda_i).cell(row.lambda_f).cell(row.achieved_delta)
                .cell(row.bound_from_run).cell(row.audit_pass).cell(row.evaluations)
                .cell(cfg.seed);
            csv.end_row();
        }
    }

    PlotSeries bound_series{"p_min (depth lower bound)", "#1f77b4", {}};
    PlotSeries achieved_series{"best achieved delta-lambda", "#d62728", {}};
    for (std::size_t ti = 0; ti < grid.size(); ++ti) {
        if (per_theta[ti].empty()) {
            continue;
        }
        bound_series.points.push_back({grid[ti], per_theta[ti].front().bound.p_min});
        double best = 0.0;
        for (const auto& row : per_theta[ti]) {
            best = std::max(best, row.achieved_delta);
        }
        achieved_series.points.push_back({grid[ti], best});
    }
    const std::vector<PlotSeries> series{bound_series, achieved_series};
    write_loglog_plot_file(std::filesystem::path(cfg.out_dir) / "sweep.svg",
                           "Depth lower bound vs initialization angle", "theta",
                           "p_min / delta-lambda", series);

    log << "wrote " << (std::filesystem::path(cfg.out_dir) / "sweep.csv").string() << " and "
        << (std::filesystem::path(cfg.out_dir) / "sweep.svg").string() << "\n";
    if (failed) {
        log << "audit FAILED: a simulated run beat its depth lower bound\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_toy(const ExperimentConfig& cfg, std::ostream& log) {
    check_depth_range(cfg, 0);
    const auto grid = theta_grid_of(cfg, /*allow_zero=*/false);

    auto out = open_output(cfg, "toy.csv");
    CsvWriter csv(out);
    csv.cell("theta").cell("p").cell("analytic_lambda").cell("simulated_lambda")
        .cell("deviation");
    csv.end_row();
    for (double theta : grid) {
        for (int p = cfg.depth_min; p <= cfg.depth_max; ++p) {
            const double analytic = toy_lambda(p, theta);
            const double simulated = toy_simulated_lambda(p, theta);
            csv.cell(theta).cell(p).cell(analytic).cell(simulated)
                .cell(std::abs(simulated - analytic));
            csv.end_row();
        }
    }

    auto req_out = open_output(cfg, "toy_required_depth.csv");
    CsvWriter req(req_out);
    req.cell("delta_lambda").cell("theta").cell("p_required");
    req.end_row();
    for (double theta : grid) {
        const auto depth = toy_required_depth(cfg.delta_lambda, theta);
        req.cell(cfg.delta_lambda).cell(theta);
        if (depth) {
            req.cell(*depth);
        } else {
            req.cell("unreachable");
        }
        req.end_row();
    }

    log << "wrote " << (std::filesystem::path(cfg.out_dir) / "toy.csv").string() << " and "
        << (std::filesystem::path(cfg.out_dir) / "toy_required_depth.csv").string() << "\n";
    return kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& log) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    const auto checks = run_verification_suite(opts);
    const bool ok = print_verify_report(log, checks);
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_command(const ExperimentConfig& cfg, std::ostream& log) {
    try {
        switch (cfg.command) {
        case Command::simulate:
            return cmd_simulate(cfg, log);
        case Command::bounds:
            return cmd_bounds(cfg, log);
        case Command::sweep_theta:
            return cmd_sweep_theta(cfg, log);
        case Command::toy:
            return cmd_toy(cfg, log);
        case Command::verify:
            return cmd_verify(cfg, log);
        }
        return kExitUsage;
    } catch (const SizeGuardError& e) {
        log << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace qaoaws
