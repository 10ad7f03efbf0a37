#include "qaoaws/toy_model.hpp"

#include <cmath>
#include <numbers>

#include "qaoaws/errors.hpp"
#include "qaoaws/qaoa.hpp"

namespace qaoaws {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfTurn = kPi / 2.0;

void check_depth(int p) {
    if (p < 0) {
        throw InvalidInputError("depth must be non-negative");
    }
}

} // namespace

ToyTrajectory toy_trajectory(int p, double theta) {
    check_depth(p);
    ToyTrajectory traj{theta, p, {theta}};
    traj.polar_angles.reserve(static_cast<std::size_t>(2 * p + 1));
    for (int round = 1; round <= p; ++round) {
        // phase layer reflects the angle, the aligned mixer advances it
        traj.polar_angles.push_back(-(2 * round - 1) * theta);
        traj.polar_angles.push_back((2 * round + 1) * theta);
    }
    return traj;
}

double toy_angle_after(int p, double theta) {
    check_depth(p);
    return (2 * p + 1) * theta;
}

double toy_lambda(int p, double theta) {
    const double s = std::sin(toy_angle_after(p, theta) / 2.0);
    return s * s;
}

std::optional<int> toy_required_depth(double delta_lambda, double theta) {
    if (!(delta_lambda > 0.0) || delta_lambda > 1.0) {
        throw InvalidInputError("delta_lambda must lie in (0, 1]");
    }
    if (!(theta > 0.0) || theta > kHalfTurn) {
        throw InvalidInputError("theta must lie in (0, pi/2]");
    }
    const double initial = toy_lambda(0, theta);
    for (int p = 1;; ++p) {
        if (toy_lambda(p, theta) - initial >= delta_lambda) {
            return p;
        }
        if (toy_angle_after(p, theta) >= kPi) {
            return std::nullopt; // trajectory overshoots the target pole
        }
    }
}

double toy_simulated_lambda(int p, double theta) {
    check_depth(p);
    if (p > 50) {
        throw InvalidInputError("crosscheck capped at depth 50");
    }

    // |theta> in the xz-plane, phase diagonal = Z eigenvalues (+1, -1),
    // mixer axis on the initial qubit position, all angles pi/2.
    const std::vector<cx_double> init_amps{cx_double{std::cos(theta / 2.0), 0.0},
                                           cx_double{std::sin(theta / 2.0), 0.0}};
    const Statevector init(1, init_amps);

    static const std::int64_t z_diagonal[2] = {1, -1};
    MixerSpec mixer;
    mixer.kind = MixerKind::aligned;
    mixer.axes = {bloch_from_polar(theta, 0.0)};

    QaoaParams params{p, std::vector<double>(static_cast<std::size_t>(p), kHalfTurn),
                      std::vector<double>(static_cast<std::size_t>(p), kHalfTurn)};
    const Statevector final_state = run_layers(init, z_diagonal, mixer, params);
    return final_state.probability(1); // <c> with c(x) = x
}

double toy_simulator_crosscheck(int p, double theta) {
    return std::abs(toy_simulated_lambda(p, theta) - toy_lambda(p, theta));
}

} // namespace qaoaws
