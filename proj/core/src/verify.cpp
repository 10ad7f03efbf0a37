#include "qaoaws/verify.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>

#include "qaoaws/bounds.hpp"
#include "qaoaws/dense.hpp"
#include "qaoaws/objective.hpp"
#include "qaoaws/qaoa.hpp"
#include "qaoaws/random_instances.hpp"

namespace qaoaws {

namespace {

struct Instance {
    Objective obj;
    int n;
};

std::vector<Instance> make_instances(std::mt19937_64& rng, int count, int max_qubits) {
    std::vector<Instance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = 2 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_qubits - 1)));
        out.push_back({maxcut_objective(random_graph(rng, n)), n});
    }
    return out;
}

VerifyCheck check_lemma(std::mt19937_64& rng, const std::vector<Instance>& instances) {
    VerifyCheck check{"per-qubit commutator identity", 0, 0.0, 1e-9, false};
    for (const auto& inst : instances) {
        const auto ws = random_zero_phase_warmstart(rng, inst.n, std::numbers::pi / 2.0);
        const double dev = lemma_check(ws, PhaseSeparator::from_objective(inst.obj));
        check.max_deviation = std::max(check.max_deviation, dev);
        ++check.cases;
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

VerifyCheck check_shift_relation(std::mt19937_64& rng, const std::vector<Instance>& instances) {
    VerifyCheck check{"shifted-commutator relation", 0, 0.0, 1e-12, false};
    for (const auto& inst : instances) {
        const auto ws = random_warmstart(rng, inst.n, std::numbers::pi / 2.0);
        const auto sep = PhaseSeparator::from_objective(inst.obj);
        const double dev =
            shifted_commutator_relation(mixer_dense(aligned_mixer(ws, false), inst.n), sep);
        check.max_deviation = std::max(check.max_deviation, dev);
        ++check.cases;
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

VerifyCheck check_at_theta(std::mt19937_64& rng, const std::vector<Instance>& instances) {
    VerifyCheck check{"at-theta p_min equality", 0, 0.0, 1e-9, false};
    for (const auto& inst : instances) {
        const double theta = rng_range(rng, 0.05, std::numbers::pi / 2.0);
        const auto bits = random_bitstring(rng, inst.n);
        const auto rel =
            at_theta_relation(PhaseSeparator::from_objective(inst.obj), theta, bits, 0.5);
        const double dev = std::abs(rel.warm_start.p_min * std::sin(theta) - rel.transverse.p_min) /
                           rel.transverse.p_min;
        check.max_deviation = std::max(check.max_deviation, dev);
        ++check.cases;
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

VerifyCheck check_zero_phase(std::mt19937_64& rng, const std::vector<Instance>& instances) {
    VerifyCheck check{"zero-phase distribution invariance", 0, 0.0, 1e-9, false};
    for (const auto& inst : instances) {
        const auto ws = random_warmstart(rng, inst.n, std::numbers::pi / 2.0);
        const auto flat = zero_phase_equivalent(ws);
        const int p = 1 + static_cast<int>(rng_below(rng, 3));
        QaoaParams params{p, {}, {}};
        for (int k = 0; k < p; ++k) {
            params.gammas.push_back(rng_range(rng, 0.0, 2.0 * std::numbers::pi));
            params.betas.push_back(rng_range(rng, 0.0, std::numbers::pi));
        }
        const auto run_a = run_qaoa(inst.obj, to_statevector(ws), aligned_mixer(ws), params);
        const auto run_b = run_qaoa(inst.obj, to_statevector(flat), aligned_mixer(flat), params);
        const double dev = total_variation_distance(run_a.final_state, run_b.final_state);
        check.max_deviation = std::max(check.max_deviation, dev);
        ++check.cases;
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

VerifyCheck check_ground_state(std::mt19937_64& rng, const std::vector<Instance>& instances) {
    VerifyCheck check{"aligned-mixer ground state", 0, 0.0, 1e-9, false};
    for (const auto& inst : instances) {
        const auto ws = random_warmstart(rng, inst.n, std::numbers::pi / 2.0);
        const auto psi = to_statevector(ws);
        Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dim()));
        for (std::size_t k = 0; k < psi.dim(); ++k) {
            v(static_cast<Eigen::Index>(k)) = psi[k];
        }
        const Eigen::MatrixXcd b = mixer_dense(aligned_mixer(ws, false), inst.n);
        const Eigen::MatrixXcd b_hat = mixer_dense(aligned_mixer(ws, true), inst.n);
        const double annihilation = (b_hat * v).norm();
        const double energy = std::abs((v.adjoint() * (b * v))(0).real() - inst.n);
        check.max_deviation = std::max({check.max_deviation, annihilation, energy});
        ++check.cases;
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

} // namespace

std::vector<VerifyCheck> run_verification_suite(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const auto instances = make_instances(rng, opts.instances, opts.max_qubits);

    std::vector<VerifyCheck> checks;
    checks.push_back(check_lemma(rng, instances));
    checks.push_back(check_shift_relation(rng, instances));
    checks.push_back(check_at_theta(rng, instances));
    checks.push_back(check_zero_phase(rng, instances));
    checks.push_back(check_ground_state(rng, instances));
    return checks;
}

bool print_verify_report(std::ostream& out, const std::vector<VerifyCheck>& checks) {
    bool all_pass = true;
    out << std::left << std::setw(38) << "check" << std::setw(8) << "cases" << std::setw(14)
        << "max dev" << std::setw(12) << "tol" << "status\n";
    for (const auto& c : checks) {
        out << std::left << std::setw(38) << c.name << std::setw(8) << c.cases;
        out << std::setw(14) << std::scientific << std::setprecision(2) << c.max_deviation;
        out << std::setw(12) << c.tolerance << (c.pass ? "pass" : "FAIL") << "\n";
        out.unsetf(std::ios::scientific);
        all_pass = all_pass && c.pass;
    }
    return all_pass;
}

} // namespace qaoaws
