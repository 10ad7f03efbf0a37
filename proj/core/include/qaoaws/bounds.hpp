#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qaoaws/dense.hpp"
#include "qaoaws/objective.hpp"
#include "qaoaws/statevector.hpp"
#include "qaoaws/warm_start.hpp"

namespace qaoaws {

/// Commutator norms at or below this are treated as exactly zero
/// (the degenerate pole case).
inline constexpr double kCommutatorZeroTol = 1e-12;

/// The maximization objective encoded with zero ground-state energy:
/// H1 = c_max I - C, where C is diagonal with entries `costs`.
struct PhaseSeparator {
    std::vector<std::int64_t> costs;
    std::int64_t c_max = 0;

    int num_qubits() const;
    Eigen::MatrixXcd cost_operator() const;   // C
    Eigen::MatrixXcd h1_operator() const;     // c_max I - C

    static PhaseSeparator from_objective(const Objective& obj);
};

/// A computed circuit-depth lower bound.
struct DepthBound {
    double delta_lambda = 0.0;
    std::int64_t c_max = 0;
    double commutator_norm = 0.0;  // ||[C, H0]||
    double p_min = 0.0;            // +infinity when !finite and delta_lambda > 0
    bool finite = true;            // commutator_norm > kCommutatorZeroTol
    bool vacuous = false;          // delta_lambda <= 0: any depth satisfies the bound
    bool delta_is_achieved = false; // delta_lambda came from a simulation run, not a target
    std::string mixer_kind;
};

/// (<psi_f|H0|psi_f> + delta_lambda * c_max) / (4 pi ||[C, H0]||).
/// +infinity when the commutator vanishes and the numerator is positive.
/// h0 must be Hermitian with zero ground energy (min eigenvalue >= -1e-6).
double theorem_bound(const Statevector& final_state,
                     const Eigen::MatrixXcd& h0,
                     double delta_lambda,
                     const PhaseSeparator& sep);

/// The looser final-state-independent bound
/// p_min = delta_lambda * c_max / (4 pi ||[C, H0]||); never exceeds
/// theorem_bound for the same inputs. `delta_is_achieved` marks whether
/// delta_lambda was measured on a run or chosen as a target.
DepthBound pmin(double delta_lambda,
                const PhaseSeparator& sep,
                const Eigen::MatrixXcd& h0,
                std::string_view mixer_kind = "",
                bool delta_is_achieved = false);

/// Max over qubits of || [B_{n_j, j}, C] - sin(theta_hat_j) [X_j, C] ||_F.
/// Azimuths are reduced to the xz-plane first; identically <= 1e-9 by the
/// per-qubit commutator identity.
double lemma_check(const WarmStart& ws, const PhaseSeparator& sep);

/// F(c) = (c_max / 2 pi) * (sum_j ||[X_j, C]||)^{-1}. Depends on the
/// objective only.
double f_of_c(const PhaseSeparator& sep);

/// delta_lambda * F / sin(theta); +infinity at theta = 0. Lower-bounds
/// pmin(...) for every within-theta warm start with the aligned shifted mixer.
double within_theta_lower(double delta_lambda, double theta, double f);

struct AtThetaRelation {
    DepthBound warm_start; // aligned shifted mixer of from_bitstring(b, theta)
    DepthBound transverse; // shifted transverse-field mixer
    double ratio = 0.0;    // p_min_ws / p_min_tf; equals 1/sin(theta)
};

/// Both shifted-mixer bounds for an at-theta warm start; the relation
/// p_min_ws * sin(theta) = p_min_tf holds for every corresponding bitstring.
AtThetaRelation at_theta_relation(const PhaseSeparator& sep,
                                  double theta,
                                  std::string_view bitstring,
                                  double delta_lambda);

/// Frobenius deviation of [B_hat, C] + 1/2 [B, C]; <= 1e-12 identically.
double shifted_commutator_relation(const Eigen::MatrixXcd& b_dense,
                                   const PhaseSeparator& sep);

} // namespace qaoaws
