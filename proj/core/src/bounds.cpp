#include "qaoaws/bounds.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "qaoaws/errors.hpp"

namespace qaoaws {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

int qubits_of_dim(std::size_t dim, const char* what) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw InvalidInputError(std::string(what) + " dimension must be a power of two");
    }
    return std::countr_zero(dim);
}

void check_bound_qubits(int n, int cap, const char* what) {
    if (n > cap) {
        throw SizeGuardError(std::string(what) + " capped at " + std::to_string(cap) +
                             " qubits, got " + std::to_string(n));
    }
}

Eigen::VectorXcd to_eigen(const Statevector& state) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t k = 0; k < state.dim(); ++k) {
        v(static_cast<Eigen::Index>(k)) = state[k];
    }
    return v;
}

void check_zero_ground_energy(const Eigen::MatrixXcd& h0) {
    if (!is_hermitian(h0, 1e-9 * std::max(1.0, h0.cwiseAbs().maxCoeff()))) {
        throw InvalidInputError("H0 must be Hermitian");
    }
    if (min_eigenvalue_hermitian(h0) < -1e-6) {
        throw InvalidInputError("H0 must have zero ground-state energy (min eigenvalue >= 0)");
    }
}

} // namespace

int PhaseSeparator::num_qubits() const {
    return qubits_of_dim(costs.size(), "cost diagonal");
}

Eigen::MatrixXcd PhaseSeparator::cost_operator() const {
    check_bound_qubits(num_qubits(), kMaxDenseQubits, "dense cost operator");
    return diagonal_operator(costs);
}

Eigen::MatrixXcd PhaseSeparator::h1_operator() const {
    const auto dim = static_cast<Eigen::Index>(costs.size());
    return static_cast<double>(c_max) * Eigen::MatrixXcd::Identity(dim, dim) - cost_operator();
}

PhaseSeparator PhaseSeparator::from_objective(const Objective& obj) {
    return PhaseSeparator{obj.values, obj.c_max};
}

double theorem_bound(const Statevector& final_state,
                     const Eigen::MatrixXcd& h0,
                     double delta_lambda,
                     const PhaseSeparator& sep) {
    if (static_cast<std::size_t>(h0.rows()) != final_state.dim() ||
        final_state.dim() != sep.costs.size()) {
        throw InvalidInputError("theorem_bound dimensions do not agree");
    }
    check_zero_ground_energy(h0);

    const Eigen::VectorXcd psi = to_eigen(final_state);
    const double h0_expectation = (psi.adjoint() * (h0 * psi))(0).real();
    const double numerator = h0_expectation + delta_lambda * static_cast<double>(sep.c_max);
    const double norm = spectral_norm(commutator(sep.cost_operator(), h0));
    if (norm <= kCommutatorZeroTol) {
        return numerator > kCommutatorZeroTol ? kInf : 0.0;
    }
    return numerator / (kFourPi * norm);
}

DepthBound pmin(double delta_lambda,
                const PhaseSeparator& sep,
                const Eigen::MatrixXcd& h0,
                std::string_view mixer_kind,
                bool delta_is_achieved) {
    if (static_cast<std::size_t>(h0.rows()) != sep.costs.size()) {
        throw InvalidInputError("pmin dimensions do not agree");
    }
    check_zero_ground_energy(h0);

    DepthBound bound;
    bound.delta_lambda = delta_lambda;
    bound.c_max = sep.c_max;
    bound.delta_is_achieved = delta_is_achieved;
    bound.mixer_kind = std::string(mixer_kind);
    bound.commutator_norm = spectral_norm(commutator(sep.cost_operator(), h0));
    bound.finite = bound.commutator_norm > kCommutatorZeroTol;
    bound.vacuous = delta_lambda <= 0.0;
    if (!bound.finite) {
        bound.p_min = delta_lambda > 0.0 ? kInf : 0.0;
    } else {
        bound.p_min = std::max(
            0.0, delta_lambda * static_cast<double>(sep.c_max) / (kFourPi * bound.commutator_norm));
    }
    return bound;
}

double lemma_check(const WarmStart& ws, const PhaseSeparator& sep) {
    const int n = sep.num_qubits();
    check_bound_qubits(n, 8, "lemma check");
    if (ws.num_qubits() != n) {
        throw InvalidInputError("warm start qubit count does not match objective");
    }
    const WarmStart flat = zero_phase_equivalent(ws);
    const Eigen::MatrixXcd c = sep.cost_operator();

    double max_dev = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto& a = flat.angles()[static_cast<std::size_t>(j)];
        const Eigen::MatrixXcd b_j =
            embed_single_qubit(bloch_axis_operator(bloch_from_polar(a.theta, a.phi)), j, n);
        const Eigen::MatrixXcd x_j = embed_single_qubit(pauli_x(), j, n);
        const Eigen::MatrixXcd lhs = commutator(b_j, c);
        const Eigen::MatrixXcd rhs = std::sin(flat.theta_hat(j)) * commutator(x_j, c);
        max_dev = std::max(max_dev, (lhs - rhs).norm());
    }
    return max_dev;
}

double f_of_c(const PhaseSeparator& sep) {
    const int n = sep.num_qubits();
    check_bound_qubits(n, 10, "F(c)");
    const Eigen::MatrixXcd c = sep.cost_operator();
    double norm_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        norm_sum += spectral_norm(commutator(embed_single_qubit(pauli_x(), j, n), c));
    }
    if (norm_sum <= kCommutatorZeroTol) {
        return kInf; // constant objective: every [X_j, C] vanishes
    }
    return static_cast<double>(sep.c_max) / (2.0 * std::numbers::pi) / norm_sum;
}

double within_theta_lower(double delta_lambda, double theta, double f) {
    if (theta < 0.0 || theta > std::numbers::pi / 2.0) {
        throw InvalidInputError("theta must lie in [0, pi/2]");
    }
    if (theta == 0.0) {
        return delta_lambda > 0.0 ? kInf : 0.0;
    }
    return delta_lambda * f / std::sin(theta);
}

AtThetaRelation at_theta_relation(const PhaseSeparator& sep,
                                  double theta,
                                  std::string_view bitstring,
                                  double delta_lambda) {
    const int n = sep.num_qubits();
    check_bound_qubits(n, 10, "at-theta relation");
    if (static_cast<int>(bitstring.size()) != n) {
        throw InvalidInputError("bitstring length does not match objective");
    }

    const WarmStart ws = WarmStart::from_bitstring(bitstring, theta);
    AtThetaRelation rel;
    rel.warm_start = pmin(delta_lambda, sep, mixer_dense(aligned_mixer(ws, true), n),
                          "aligned-shifted");
    rel.transverse = pmin(delta_lambda, sep, mixer_dense(transverse_field_mixer(n, true), n),
                          "transverse-field-shifted");
    rel.ratio = rel.warm_start.p_min / rel.transverse.p_min;
    return rel;
}

double shifted_commutator_relation(const Eigen::MatrixXcd& b_dense, const PhaseSeparator& sep) {
    const int n = sep.num_qubits();
    check_bound_qubits(n, 8, "shifted-commutator relation");
    if (b_dense.rows() != static_cast<Eigen::Index>(sep.costs.size())) {
        throw InvalidInputError("mixer dimension does not match objective");
    }
    const Eigen::MatrixXcd c = sep.cost_operator();
    const Eigen::MatrixXcd b_hat =
        0.5 * (static_cast<double>(n) * Eigen::MatrixXcd::Identity(b_dense.rows(), b_dense.cols()) -
               b_dense);
    return (commutator(b_hat, c) + 0.5 * commutator(b_dense, c)).norm();
}

} // namespace qaoaws
