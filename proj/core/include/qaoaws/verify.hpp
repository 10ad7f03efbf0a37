#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qaoaws {

struct VerifyCheck {
    std::string name;
    int cases = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int instances = 50;     // random instances per check
    int max_qubits = 5;
};

/// Runs the identity suite on seeded random instances: the per-qubit
/// commutator identity, the shifted-commutator relation, the at-theta
/// p_min equality, zero-phase distribution invariance, and the mixer
/// ground-state facts (B|psi> = n|psi>, B_hat|psi> = 0).
std::vector<VerifyCheck> run_verification_suite(const VerifyOptions& opts);

/// Fixed-width pass/fail table; returns true iff every check passed.
bool print_verify_report(std::ostream& out, const std::vector<VerifyCheck>& checks);

} // namespace qaoaws
