#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "qaoaws/bloch.hpp"
#include "qaoaws/mixer.hpp"

namespace qaoaws {

/// Dense 2^n x 2^n matrices are only built up to this many qubits.
inline constexpr int kMaxDenseQubits = 12;

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

/// x X + y Y + z Z for a unit axis.
Eigen::Matrix2cd bloch_axis_operator(const BlochVector& axis);

/// Places a 2x2 operator on qubit `qubit` of an n-qubit register
/// (little-endian index convention, identity elsewhere).
Eigen::MatrixXcd embed_single_qubit(const Eigen::Matrix2cd& op, int qubit, int num_qubits);

/// diag(values) as a dense complex matrix.
Eigen::MatrixXcd diagonal_operator(std::span<const std::int64_t> values);

/// Dense matrix of a MixerSpec: sum_j n_j . (X, Y, Z)_j, shifted per flag.
Eigen::MatrixXcd mixer_dense(const MixerSpec& mixer, int num_qubits);

/// a b - b a.
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest singular value. Hermitian and anti-Hermitian inputs go through a
/// dense self-adjoint eigensolve (of m or i*m); anything else falls back to an SVD.
double spectral_norm(const Eigen::MatrixXcd& m);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-9);
bool is_anti_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-9);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue_hermitian(const Eigen::MatrixXcd& m);

} // namespace qaoaws
