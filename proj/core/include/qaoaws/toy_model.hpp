#pragma once

#include <optional>
#include <vector>

namespace qaoaws {

/// Closed-form single-qubit model: objective c(x) = x, phase layer e^{-i gamma Z},
/// mixer aligned with the initial state |theta> in the xz-plane. With
/// gamma = beta = pi/2 every unitary is a half-turn and the state walks the
/// xz-plane arc theta -> -theta -> 3 theta -> -3 theta -> 5 theta -> ...

/// Signed xz-plane polar angles after each of the 2p unitaries (the leading
/// entry is the initial theta).
struct ToyTrajectory {
    double theta = 0.0;
    int p = 0;
    std::vector<double> polar_angles; // length 2p + 1
};

ToyTrajectory toy_trajectory(int p, double theta);

/// (2p + 1) * theta, the polar angle after p full rounds.
double toy_angle_after(int p, double theta);

/// sin^2((2p + 1) theta / 2) = P(measure 1) after p rounds; p = 0 gives the
/// initial ratio sin^2(theta / 2).
double toy_lambda(int p, double theta);

/// Smallest p >= 1 with toy_lambda(p) - toy_lambda(0) >= delta_lambda,
/// searching no further than the first p with (2p + 1) theta >= pi (past
/// that the trajectory overshoots the south pole). nullopt when the target
/// is unreachable under the cap.
std::optional<int> toy_required_depth(double delta_lambda, double theta);

/// Runs the statevector engine on the same schedule: phase diagonal (+1, -1),
/// mixer axis (sin theta, 0, cos theta), gamma_k = beta_k = pi/2. Returns the
/// simulated lambda = P(measure 1).
double toy_simulated_lambda(int p, double theta);

/// |toy_simulated_lambda(p, theta) - toy_lambda(p, theta)|.
double toy_simulator_crosscheck(int p, double theta);

} // namespace qaoaws
