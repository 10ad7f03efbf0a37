#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "qaoaws/csv.hpp"
#include "qaoaws/errors.hpp"
#include "qaoaws/experiments.hpp"
#include "qaoaws/svg.hpp"

namespace {

using namespace qaoaws;
constexpr double kPi = std::numbers::pi;

std::filesystem::path make_temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("qaoaws_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    EXPECT_TRUE(in) << path;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path write_k3(const std::filesystem::path& dir) {
    const auto path = dir / "k3.txt";
    std::ofstream out(path, std::ios::binary);
    out << "0 1\n1 2\n0 2\n";
    return path;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

TEST(CsvFormat, TwelveSignificantDigitsAndQuoting) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");

    std::ostringstream out;
    CsvWriter csv(out);
    csv.cell("plain").cell("with,comma").cell("with\"quote");
    csv.end_row();
    EXPECT_EQ(out.str(), "plain,\"with,comma\",\"with\"\"quote\"\n");
}

TEST(CmdSimulate, AtThetaDepthZeroRow) {
    const auto dir = make_temp_dir("sim_p0");
    std::ofstream(dir / "k2.txt") << "0 1\n";

    ExperimentConfig cfg;
    cfg.command = Command::simulate;
    cfg.graph_path = (dir / "k2.txt").string();
    cfg.bitstring = "01";
    cfg.theta = kPi / 3.0;
    cfg.depth_min = cfg.depth_max = 0;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);

    const auto lines = split_lines(slurp(dir / "runs.csv"));
    ASSERT_EQ(lines.size(), 2u);
    const auto cells = split_cells(lines[1]);
    // n,theta,p,gamma*,beta*,expectation,lambda_i,lambda_f,delta_lambda,...
    EXPECT_EQ(cells[0], "2");
    EXPECT_EQ(cells[2], "0");
    EXPECT_EQ(cells[7], "0.625");
    EXPECT_EQ(cells[8], "0");
}

TEST(CmdSimulate, ToyFixedScheduleRow) {
    const auto dir = make_temp_dir("sim_toy");
    ExperimentConfig cfg;
    cfg.command = Command::simulate;
    cfg.toy_instance = true;
    cfg.theta = 0.3;
    cfg.depth_min = cfg.depth_max = 1;
    cfg.gammas = {kPi / 2.0};
    cfg.betas = {kPi / 2.0};
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);
    const auto cells = split_cells(split_lines(slurp(dir / "runs.csv"))[1]);
    const double lambda_f = std::stod(cells[7]);
    EXPECT_NEAR(lambda_f, std::pow(std::sin(0.45), 2), 1e-9);
}

TEST(CmdSimulate, PoleWarmStartIsStuck) {
    const auto dir = make_temp_dir("sim_pole");
    const auto graph = write_k3(dir);

    ExperimentConfig cfg;
    cfg.command = Command::simulate;
    cfg.graph_path = graph.string();
    cfg.bitstring = "010";
    cfg.theta = 0.0;
    cfg.depth_min = 1;
    cfg.depth_max = 3;
    cfg.gammas = {0.9};
    cfg.betas = {1.7};
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);
    for (const auto& line : split_lines(slurp(dir / "runs.csv"))) {
        if (line.starts_with("n,")) {
            continue;
        }
        const auto cells = split_cells(line);
        EXPECT_NEAR(std::stod(cells[6]), std::stod(cells[7]), 1e-12); // lambda_i == lambda_f
    }
}

TEST(CmdBounds, TransverseFieldRowMatchesEquatorRow) {
    const auto dir = make_temp_dir("bounds");
    const auto graph = write_k3(dir);

    ExperimentConfig cfg;
    cfg.command = Command::bounds;
    cfg.graph_path = graph.string();
    cfg.theta_grid = {kPi / 6.0, kPi / 2.0};
    cfg.delta_lambda = 0.5;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);
    const auto lines = split_lines(slurp(dir / "bounds.csv"));
    ASSERT_EQ(lines.size(), 4u); // header + TF + 2 grid rows

    const auto tf = split_cells(lines[1]);
    const auto sixth = split_cells(lines[2]);
    const auto equator = split_cells(lines[3]);
    ASSERT_EQ(tf[1], "transverse-field-shifted");

    // theta = pi/2 row equals the TF row, theta = pi/6 doubles p_min
    EXPECT_EQ(equator[3], tf[3]);
    EXPECT_NEAR(std::stod(sixth[3]), 2.0 * std::stod(tf[3]), 1e-9);

    // theta = 0 rows carry finite = false
    cfg.theta_grid = {0.0};
    std::ostringstream log2;
    ASSERT_EQ(run_command(cfg, log2), kExitOk);
    const auto zero_row = split_cells(split_lines(slurp(dir / "bounds.csv"))[2]);
    EXPECT_EQ(zero_row[4], "false");
    EXPECT_EQ(zero_row[3], "inf");
}

TEST(CmdSweepTheta, AuditPassesAndSvgIsSelfContained) {
    const auto dir = make_temp_dir("sweep");
    const auto graph = write_k3(dir);

    ExperimentConfig cfg;
    cfg.command = Command::sweep_theta;
    cfg.graph_path = graph.string();
    cfg.theta_grid = {0.05, 0.2, 0.8};
    cfg.depth_min = 1;
    cfg.depth_max = 2;
    cfg.budget = 200;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);

    const auto lines = split_lines(slurp(dir / "sweep.csv"));
    ASSERT_EQ(lines.size(), 7u); // header + 3 thetas x 2 depths
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_cells(lines[i]);
        EXPECT_EQ(cells[11], "true") << lines[i];
    }

    const std::string svg = slurp(dir / "sweep.svg");
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("polyline"), std::string::npos);
    EXPECT_NE(svg.find("p_min"), std::string::npos);
    EXPECT_NE(svg.find("delta-lambda"), std::string::npos);
    // self-contained: no links or external resources
    EXPECT_EQ(svg.find("href"), std::string::npos);
    EXPECT_EQ(svg.find("url("), std::string::npos);

    // theta = 0 is rejected for sweeps
    cfg.theta_grid = {0.0, 0.1};
    std::ostringstream log2;
    EXPECT_EQ(run_command(cfg, log2), kExitUsage);
}

TEST(CmdToy, TablesComeOutConsistent) {
    const auto dir = make_temp_dir("toy");
    ExperimentConfig cfg;
    cfg.command = Command::toy;
    cfg.theta_grid = {0.1, 0.3};
    cfg.depth_min = 0;
    cfg.depth_max = 3;
    cfg.delta_lambda = 0.5;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);

    const auto lines = split_lines(slurp(dir / "toy.csv"));
    ASSERT_EQ(lines.size(), 9u);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        EXPECT_LE(std::stod(split_cells(lines[i])[4]), 1e-9);
    }

    const auto req_lines = split_lines(slurp(dir / "toy_required_depth.csv"));
    ASSERT_EQ(req_lines.size(), 3u);
    // delta_lambda = 0.5 is reachable at both grid thetas
    EXPECT_GE(std::stoi(split_cells(req_lines[1])[2]), 1);
    EXPECT_GE(std::stoi(split_cells(req_lines[2])[2]), 1);

    // at theta = pi/2 the trajectory overshoots before gaining 0.5
    ExperimentConfig capped = cfg;
    capped.theta_grid = {kPi / 2.0};
    std::ostringstream log2;
    ASSERT_EQ(run_command(capped, log2), kExitOk);
    const auto capped_lines = split_lines(slurp(dir / "toy_required_depth.csv"));
    EXPECT_EQ(split_cells(capped_lines[1])[2], "unreachable");
}

TEST(CmdVerify, DefaultSeedPasses) {
    ExperimentConfig cfg;
    cfg.command = Command::verify;
    std::ostringstream log;
    EXPECT_EQ(run_command(cfg, log), kExitOk);
    EXPECT_NE(log.str().find("pass"), std::string::npos);
    EXPECT_EQ(log.str().find("FAIL"), std::string::npos);
}

TEST(RunCommand, ExitCodesForBadInput) {
    const auto dir = make_temp_dir("exit_codes");

    ExperimentConfig missing;
    missing.command = Command::simulate;
    missing.out_dir = dir.string();
    std::ostringstream log;
    EXPECT_EQ(run_command(missing, log), kExitUsage); // no instance source

    std::ofstream(dir / "bad.txt") << "0 0\n";
    ExperimentConfig bad;
    bad.command = Command::bounds;
    bad.graph_path = (dir / "bad.txt").string();
    bad.out_dir = dir.string();
    std::ostringstream log2;
    EXPECT_EQ(run_command(bad, log2), kExitUsage); // self-loop -> parse error

    std::ofstream big_graph(dir / "big.txt");
    for (int u = 0; u < 21; ++u) {
        big_graph << u << " " << (u + 1) << "\n";
    }
    big_graph.close();
    ExperimentConfig big;
    big.command = Command::bounds;
    big.graph_path = (dir / "big.txt").string();
    big.out_dir = dir.string();
    std::ostringstream log3;
    EXPECT_EQ(run_command(big, log3), kExitSizeGuard); // 22 vertices
}

TEST(ConfigFile, FlagsOverrideJson) {
    ExperimentConfig base;
    base.command = Command::bounds;
    const auto merged = apply_config_json(
        base, R"({"graph": "g.txt", "delta_lambda": 0.25, "theta_grid": [0.1, 0.2],
                  "depth_range": [1, 3], "seed": 9})");
    EXPECT_EQ(merged.graph_path, "g.txt");
    EXPECT_DOUBLE_EQ(merged.delta_lambda, 0.25);
    EXPECT_EQ(merged.theta_grid.size(), 2u);
    EXPECT_EQ(merged.depth_min, 1);
    EXPECT_EQ(merged.depth_max, 3);
    EXPECT_EQ(merged.seed, 9u);

    EXPECT_THROW(apply_config_json(base, R"({"unknown_key": 1})"), ParseError);
    EXPECT_THROW(apply_config_json(base, "not json"), ParseError);
}

TEST(CmdBounds, ObjectiveTableInstance) {
    const auto dir = make_temp_dir("table");
    std::ofstream(dir / "table.json") << R"({"n": 2, "values": [0, 1, 1, 0]})";

    ExperimentConfig cfg;
    cfg.command = Command::bounds;
    cfg.objective_path = (dir / "table.json").string();
    cfg.theta = 0.2; // single theta doubles as a one-point grid
    cfg.delta_lambda = 1.0;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);
    const auto lines = split_lines(slurp(dir / "bounds.csv"));
    ASSERT_EQ(lines.size(), 3u); // header + TF + one grid row
    // single unit edge: ||[C, B_hat_TF]|| = 1, so the TF p_min is 1 / (4 pi)
    EXPECT_NEAR(std::stod(split_cells(lines[1])[3]), 1.0 / (4.0 * kPi), 1e-9);
}

// A warm start stuck near the pole improves far less than one at a healthy
// angle, at the same depth.
TEST(CmdSweepTheta, SmallThetaAchievesLess) {
    const auto dir = make_temp_dir("sweep_stuck");
    const auto graph = write_k3(dir);

    ExperimentConfig cfg;
    cfg.command = Command::sweep_theta;
    cfg.graph_path = graph.string();
    cfg.bitstring = "000"; // cut value 0: a non-optimal corresponding bitstring
    cfg.theta_grid = {0.05, kPi / 3.0};
    cfg.depth_min = cfg.depth_max = 2;
    cfg.budget = 300;
    cfg.out_dir = dir.string();

    std::ostringstream log;
    ASSERT_EQ(run_command(cfg, log), kExitOk);
    const auto lines = split_lines(slurp(dir / "sweep.csv"));
    ASSERT_EQ(lines.size(), 3u);
    const double achieved_small = std::stod(split_cells(lines[1])[9]);
    const double achieved_large = std::stod(split_cells(lines[2])[9]);
    EXPECT_LT(achieved_small, achieved_large);
}

TEST(Determinism, SweepIsByteIdenticalForSameSeed) {
    const auto dir = make_temp_dir("determinism");
    const auto graph = write_k3(dir);

    ExperimentConfig cfg;
    cfg.command = Command::sweep_theta;
    cfg.graph_path = graph.string();
    cfg.theta_grid = {0.1, 0.4};
    cfg.depth_min = 1;
    cfg.depth_max = 2;
    cfg.budget = 150;
    cfg.seed = 7;

    cfg.out_dir = (dir / "a").string();
    std::ostringstream log_a;
    ASSERT_EQ(run_command(cfg, log_a), kExitOk);
    cfg.out_dir = (dir / "b").string();
    std::ostringstream log_b;
    ASSERT_EQ(run_command(cfg, log_b), kExitOk);

    EXPECT_EQ(slurp(dir / "a" / "sweep.csv"), slurp(dir / "b" / "sweep.csv"));
    EXPECT_EQ(slurp(dir / "a" / "sweep.svg"), slurp(dir / "b" / "sweep.svg"));
}

} // namespace
