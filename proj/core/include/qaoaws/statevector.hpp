#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qaoaws/bloch.hpp"

namespace qaoaws {

using cx_double = std::complex<double>;

/// Hard cap on simulated qubits (2^20 amplitudes); dense-matrix code has a
/// tighter cap of its own.
inline constexpr int kMaxStatevectorQubits = 20;

/// Dense n-qubit state, 2^n complex amplitudes.
///
/// Basis convention is little-endian: bit j of the array index (LSB = qubit 0)
/// holds the value of classical variable x_j.
class Statevector {
public:
    explicit Statevector(int num_qubits);
    Statevector(int num_qubits, std::vector<cx_double> amplitudes);

    static Statevector basis_state(int num_qubits, std::uint64_t index);
    static Statevector uniform_superposition(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const cx_double> amps() const { return amps_; }
    cx_double& operator[](std::size_t k) { return amps_[k]; }
    const cx_double& operator[](std::size_t k) const { return amps_[k]; }

    double norm() const;
    double probability(std::size_t k) const { return std::norm(amps_[k]); }
    std::vector<double> probabilities() const;

private:
    int num_qubits_;
    std::vector<cx_double> amps_;
};

/// amps_k <- e^{-i gamma costs_k} amps_k. The diagonal phase layer U(C, gamma).
Statevector apply_phase_separator(Statevector state,
                                  std::span<const std::int64_t> costs,
                                  double gamma);

/// Applies e^{-i beta (x X + y Y + z Z)} = cos(beta) I - i sin(beta) (x X + y Y + z Z)
/// to one qubit; a rotation by angle 2*beta about `axis`.
Statevector apply_single_qubit_axis_rotation(Statevector state,
                                             int qubit,
                                             const BlochVector& axis,
                                             double beta);

/// <state| diag(costs) |state> = sum_k costs_k |amps_k|^2.
double expectation_diag(const Statevector& state, std::span<const std::int64_t> costs);

/// 1/2 sum_k | |a_k|^2 - |b_k|^2 | between the two measurement distributions.
double total_variation_distance(const Statevector& a, const Statevector& b);

/// Bloch coordinates of a single-qubit state.
BlochVector single_qubit_bloch(const Statevector& state);

} // namespace qaoaws
