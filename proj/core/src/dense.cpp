#include "qaoaws/dense.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qaoaws/errors.hpp"

namespace qaoaws {

namespace {

constexpr cx_double kI{0.0, 1.0};

void check_dense_qubits(int num_qubits) {
    if (num_qubits < 1) {
        throw InvalidInputError("need at least one qubit");
    }
    if (num_qubits > kMaxDenseQubits) {
        throw SizeGuardError("dense operators capped at " + std::to_string(kMaxDenseQubits) +
                             " qubits, got " + std::to_string(num_qubits));
    }
}

void check_finite(const Eigen::MatrixXcd& m) {
    if (!m.allFinite()) {
        throw InvalidInputError("matrix has non-finite entries");
    }
}

} // namespace

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, -kI, kI, 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd bloch_axis_operator(const BlochVector& axis) {
    return axis.x * pauli_x() + axis.y * pauli_y() + axis.z * pauli_z();
}

Eigen::MatrixXcd embed_single_qubit(const Eigen::Matrix2cd& op, int qubit, int num_qubits) {
    check_dense_qubits(num_qubits);
    if (qubit < 0 || qubit >= num_qubits) {
        throw InvalidInputError("qubit index out of range");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & bit) {
            continue;
        }
        const auto k0 = static_cast<Eigen::Index>(base);
        const auto k1 = static_cast<Eigen::Index>(base | bit);
        out(k0, k0) = op(0, 0);
        out(k0, k1) = op(0, 1);
        out(k1, k0) = op(1, 0);
        out(k1, k1) = op(1, 1);
    }
    return out;
}

Eigen::MatrixXcd diagonal_operator(std::span<const std::int64_t> values) {
    const auto dim = static_cast<Eigen::Index>(values.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        out(k, k) = static_cast<double>(values[static_cast<std::size_t>(k)]);
    }
    return out;
}

Eigen::MatrixXcd mixer_dense(const MixerSpec& mixer, int num_qubits) {
    check_dense_qubits(num_qubits);
    if (mixer.num_qubits() != num_qubits) {
        throw InvalidInputError("mixer qubit count does not match");
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < num_qubits; ++j) {
        sum += embed_single_qubit(bloch_axis_operator(mixer.axes[j]), j, num_qubits);
    }
    if (mixer.shifted) {
        return 0.5 * (static_cast<double>(num_qubits) *
                          Eigen::MatrixXcd::Identity(dim, dim) -
                      sum);
    }
    return sum;
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw InvalidInputError("commutator needs equal square dimensions");
    }
    return a * b - b * a;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_anti_hermitian(const Eigen::MatrixXcd& m, double tol) {
    return (m + m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    check_finite(m);
    if (m.rows() != m.cols()) {
        throw InvalidInputError("spectral norm needs a square matrix");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        return 0.0;
    }
    const double tol = 1e-12 * scale;
    if (is_hermitian(m, tol)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    if (is_anti_hermitian(m, tol)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kI * m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

double min_eigenvalue_hermitian(const Eigen::MatrixXcd& m) {
    check_finite(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace qaoaws
