#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qaoaws/errors.hpp"
#include "qaoaws/statevector.hpp"
#include "qaoaws/toy_model.hpp"

namespace {

using namespace qaoaws;
constexpr double kPi = std::numbers::pi;

TEST(ToyAngle, ClosedForm) {
    EXPECT_DOUBLE_EQ(toy_angle_after(0, 0.3), 0.3);
    EXPECT_DOUBLE_EQ(toy_angle_after(1, 0.3), 0.9);
    EXPECT_NEAR(toy_angle_after(3, 0.2), 1.4, 1e-15);
    EXPECT_THROW(toy_angle_after(-1, 0.3), InvalidInputError);
}

TEST(ToyTrajectoryRecord, AlternatingSigns) {
    const auto traj = toy_trajectory(2, 0.2);
    ASSERT_EQ(traj.polar_angles.size(), 5u);
    const double expected[5] = {0.2, -0.2, 0.6, -0.6, 1.0};
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_NEAR(traj.polar_angles[k], expected[k], 1e-15);
    }
}

TEST(ToyLambda, ClosedForm) {
    EXPECT_DOUBLE_EQ(toy_lambda(3, 0.0), 0.0);
    EXPECT_NEAR(toy_lambda(0, 0.8), std::pow(std::sin(0.4), 2), 1e-15);
    EXPECT_NEAR(toy_lambda(2, kPi / 5.0), 1.0, 1e-12); // (2p+1) theta / 2 = pi / 2
}

TEST(ToyRequiredDepth, EnumerationExamples) {
    // theta = pi/2: lambda_i = 1/2 and depth 1 overshoots at the same 1/2
    EXPECT_FALSE(toy_required_depth(0.5, kPi / 2.0).has_value());

    // tiny target: the first step already moves the state
    EXPECT_EQ(toy_required_depth(1e-6, 0.5).value(), 1);

    // halving theta roughly doubles the required depth
    const int coarse = toy_required_depth(0.9, 0.1).value();
    const int fine = toy_required_depth(0.9, 0.05).value();
    const double ratio = static_cast<double>(fine) / static_cast<double>(coarse);
    EXPECT_GE(ratio, 1.8);
    EXPECT_LE(ratio, 2.2);

    EXPECT_THROW(toy_required_depth(0.0, 0.1), InvalidInputError);
    EXPECT_THROW(toy_required_depth(0.5, 0.0), InvalidInputError);
}

TEST(ToyRequiredDepth, DepthTimesThetaStabilizes) {
    const double reference = 2.0 * std::asin(std::sqrt(0.9)); // limit of (2p+1) theta
    double low = 1e30, high = 0.0;
    for (double theta : {0.1, 0.05, 0.025, 0.0125}) {
        const int p = toy_required_depth(0.9, theta).value();
        const double product = p * theta;
        low = std::min(low, product);
        high = std::max(high, product);
        EXPECT_LE(product, 1.25 * (reference / 2.0)) << "theta=" << theta;
    }
    EXPECT_LE(high / low, 1.25);
}

TEST(ToyCrosscheck, SimulatorMatchesClosedForm) {
    EXPECT_LE(toy_simulator_crosscheck(3, 0.0), 1e-15);
    EXPECT_NEAR(toy_simulated_lambda(1, 0.3), std::pow(std::sin(0.45), 2), 1e-12);
    for (double theta : {0.1, 0.2, 0.5}) {
        for (int p = 1; p <= 5; ++p) {
            EXPECT_LE(toy_simulator_crosscheck(p, theta), 1e-9)
                << "theta=" << theta << " p=" << p;
        }
    }
}

// the half-turn schedule never leaves the xz-plane
TEST(ToyCrosscheck, TrajectoryStaysInXzPlane) {
    const double theta = 0.37;
    Statevector state(1, {cx_double{std::cos(theta / 2.0), 0.0},
                          cx_double{std::sin(theta / 2.0), 0.0}});
    const std::int64_t z_costs[2] = {1, -1};
    const BlochVector axis = bloch_from_polar(theta, 0.0);
    for (int step = 0; step < 10; ++step) {
        if (step % 2 == 0) {
            state = apply_phase_separator(std::move(state), z_costs, kPi / 2.0);
        } else {
            state = apply_single_qubit_axis_rotation(std::move(state), 0, axis, kPi / 2.0);
        }
        EXPECT_LE(std::abs(single_qubit_bloch(state).y), 1e-9) << "step " << step;
    }
}

} // namespace
