#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qaoaws/bounds.hpp"
#include "qaoaws/errors.hpp"
#include "qaoaws/optimize.hpp"
#include "qaoaws/qaoa.hpp"
#include "qaoaws/random_instances.hpp"
#include "test_support.hpp"

namespace {

using namespace qaoaws;
constexpr double kPi = std::numbers::pi;

PhaseSeparator k2_sep() {
    return PhaseSeparator::from_objective(maxcut_objective(parse_graph("0 1\n")));
}
PhaseSeparator k3_sep() {
    return PhaseSeparator::from_objective(maxcut_objective(parse_graph("0 1\n1 2\n0 2\n")));
}

TEST(PhaseSeparatorType, H1HasZeroGroundEnergy) {
    const auto sep = k3_sep();
    const Eigen::MatrixXcd h1 = sep.h1_operator();
    EXPECT_NEAR(min_eigenvalue_hermitian(h1), 0.0, 1e-12);
}

TEST(TheoremBound, ZeroNumeratorGivesZero) {
    // delta_lambda = 0 and the final state still the mixer ground state
    const auto sep = k2_sep();
    const auto ws = WarmStart::from_bitstring("01", 0.4);
    const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(ws, true), 2);
    EXPECT_NEAR(theorem_bound(to_statevector(ws), h0, 0.0, sep), 0.0, 1e-9);
}

// The depth-1 toy run achieves its own delta-lambda, so the bound <= 1.
TEST(TheoremBound, ToyRunRespectsItsOwnBound) {
    const auto obj = toy_objective();
    const auto sep = PhaseSeparator::from_objective(obj);
    const std::int64_t z_costs[2] = {1, -1};
    for (double theta : {0.1, 0.3, 0.7, 1.2, kPi / 2.0}) {
        const Statevector init(1, {cx_double{std::cos(theta / 2.0), 0.0},
                                   cx_double{std::sin(theta / 2.0), 0.0}});
        MixerSpec mixer{MixerKind::aligned, {bloch_from_polar(theta, 0.0)}, false};
        const auto run = run_qaoa_with_phase(obj, z_costs, init, mixer,
                                             QaoaParams{1, {kPi / 2.0}, {kPi / 2.0}});
        const double delta =
            run.lambda - std::pow(std::sin(theta / 2.0), 2);
        const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(zero_phase_equivalent(
                                                    WarmStart({{theta, 0.0}})), true), 1);
        const double bound = theorem_bound(run.final_state, h0, delta, sep);
        EXPECT_LE(bound, 1.0 + 1e-9) << "theta=" << theta;
        EXPECT_GE(bound, 0.0);
    }
}

TEST(TheoremBound, PoleDegeneracyIsInfinite) {
    const auto sep = k2_sep();
    const auto ws = WarmStart::from_bitstring("00", 0.0);
    const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(ws, true), 2);
    const double bound = theorem_bound(to_statevector(ws), h0, 0.25, sep);
    EXPECT_TRUE(std::isinf(bound));
}

TEST(TheoremBound, RejectsNegativeGroundEnergy) {
    const auto sep = k2_sep();
    const auto ws = WarmStart::from_bitstring("00", 0.3);
    const Eigen::MatrixXcd unshifted = mixer_dense(aligned_mixer(ws, false), 2);
    EXPECT_THROW(theorem_bound(to_statevector(ws), unshifted, 0.1, sep), InvalidInputError);
}

TEST(Pmin, ZeroDeltaLambda) {
    const auto sep = k2_sep();
    const auto bound = pmin(0.0, sep, mixer_dense(transverse_field_mixer(2, true), 2));
    EXPECT_DOUBLE_EQ(bound.p_min, 0.0);
    EXPECT_TRUE(bound.vacuous);
    EXPECT_TRUE(bound.finite);
}

// ||[C, B_hat_TF]|| = 1 for the single edge, so p_min = 1 / (4 pi) at
// delta_lambda = 1; the hand-computed norm doubles as the eigensolve oracle.
TEST(Pmin, SingleEdgeTransverseField) {
    const auto sep = k2_sep();
    const auto bound = pmin(1.0, sep, mixer_dense(transverse_field_mixer(2, true), 2),
                            "transverse-field-shifted");
    EXPECT_NEAR(bound.commutator_norm, 1.0, 1e-12);
    EXPECT_NEAR(bound.p_min, 1.0 / (4.0 * kPi), 1e-12);
    EXPECT_EQ(bound.mixer_kind, "transverse-field-shifted");

    const auto rel = at_theta_relation(sep, kPi / 6.0, "00", 1.0);
    EXPECT_NEAR(rel.warm_start.p_min, 2.0 * bound.p_min, 1e-12);
    EXPECT_NEAR(rel.ratio, 2.0, 1e-12);
}

TEST(Pmin, NeverExceedsTheoremBound) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 3));
        const auto obj = maxcut_objective(random_graph(rng, n));
        const auto sep = PhaseSeparator::from_objective(obj);
        const auto ws = random_warmstart(rng, n, 1.2);
        const Eigen::MatrixXcd h0 = mixer_dense(aligned_mixer(ws, true), n);
        const double delta = rng_range(rng, 0.0, 0.7);
        const auto final_state = oracles::random_state(rng, n);
        EXPECT_LE(pmin(delta, sep, h0).p_min, theorem_bound(final_state, h0, delta, sep) + 1e-12);
    }
}

TEST(Pmin, NegativeDeltaLambdaIsVacuous) {
    const auto sep = k2_sep();
    const auto bound = pmin(-0.2, sep, mixer_dense(transverse_field_mixer(2, true), 2));
    EXPECT_TRUE(bound.vacuous);
    EXPECT_DOUBLE_EQ(bound.p_min, 0.0);
}

TEST(LemmaCheck, PolesAndEquator) {
    const auto sep = k3_sep();
    EXPECT_LE(lemma_check(WarmStart::from_bitstring("010", 0.0), sep), 1e-12);
    EXPECT_LE(lemma_check(WarmStart::from_bitstring("010", kPi / 2.0), sep), 1e-12);
}

TEST(LemmaCheck, RandomInstances) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 4));
        const auto sep = PhaseSeparator::from_objective(maxcut_objective(random_graph(rng, n, 3)));
        const auto ws = random_zero_phase_warmstart(rng, n, kPi / 2.0);
        EXPECT_LE(lemma_check(ws, sep), 1e-9);
    }
}

TEST(FOfC, ToyAndK2) {
    EXPECT_NEAR(f_of_c(PhaseSeparator::from_objective(toy_objective())), 1.0 / (2.0 * kPi),
                1e-12);
    // both single-qubit commutator norms are 1 for the unit edge
    EXPECT_NEAR(f_of_c(k2_sep()), 1.0 / (4.0 * kPi), 1e-12);
}

TEST(FOfC, InvariantUnderWeightScaling) {
    const auto unit = f_of_c(k2_sep());
    const auto doubled =
        f_of_c(PhaseSeparator::from_objective(maxcut_objective(parse_graph("0 1 2\n"))));
    EXPECT_NEAR(unit, doubled, 1e-12);
}

TEST(FOfC, MatchesCombinatorialOracle) {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 4));
        const auto obj = maxcut_objective(random_graph(rng, n, 4));
        const auto sep = PhaseSeparator::from_objective(obj);
        double norm_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            norm_sum += oracles::xj_commutator_norm_oracle(cost_diagonal(obj), j);
        }
        EXPECT_NEAR(f_of_c(sep), static_cast<double>(obj.c_max) / (2.0 * kPi) / norm_sum, 1e-12);
    }
}

TEST(WithinThetaLower, EdgeValues) {
    EXPECT_DOUBLE_EQ(within_theta_lower(0.0, 0.3, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(within_theta_lower(0.4, kPi / 2.0, 2.0), 0.8);
    EXPECT_TRUE(std::isinf(within_theta_lower(0.4, 0.0, 2.0)));
}

TEST(WithinThetaLower, HoldsForRandomWarmStarts) {
    std::mt19937_64 rng(83);
    const auto sep = k3_sep();
    const double f = f_of_c(sep);
    const double theta = 0.3;
    const double delta = 0.5;
    const double floor_value = within_theta_lower(delta, theta, f);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ws = random_zero_phase_warmstart(rng, 3, theta);
        const auto bound = pmin(delta, sep, mixer_dense(aligned_mixer(ws, true), 3));
        EXPECT_GE(bound.p_min, floor_value - 1e-9);
    }
}

TEST(AtThetaRelation, EquatorMatchesTransverseField) {
    const auto rel = at_theta_relation(k3_sep(), kPi / 2.0, "000", 0.5);
    EXPECT_NEAR(rel.ratio, 1.0, 1e-12);
    EXPECT_NEAR(rel.warm_start.p_min, rel.transverse.p_min, 1e-12);
}

TEST(AtThetaRelation, BitstringIndependence) {
    const auto sep = k3_sep();
    const auto a = at_theta_relation(sep, 0.4, "000", 0.5);
    const auto b = at_theta_relation(sep, 0.4, "011", 0.5);
    EXPECT_NEAR(a.warm_start.p_min, b.warm_start.p_min, 1e-9 * a.warm_start.p_min);
    EXPECT_NEAR(a.warm_start.p_min * std::sin(0.4), a.transverse.p_min,
                1e-9 * a.transverse.p_min);
}

TEST(AtThetaRelation, SinThetaProductIsConstant) {
    const auto sep = k3_sep();
    double reference = 0.0;
    for (double theta : {0.025, 0.1, 0.4, 1.0, kPi / 2.0}) {
        const auto rel = at_theta_relation(sep, theta, "010", 0.5);
        const double product = rel.warm_start.p_min * std::sin(theta);
        if (reference == 0.0) {
            reference = product;
        }
        EXPECT_NEAR(product, reference, 1e-9 * reference);
    }
}

TEST(ShiftedCommutatorRelation, HoldsForZAxesTransverseFieldAndRandom) {
    const auto sep_k2 = k2_sep();
    // pure Z axes: both sides vanish
    MixerSpec z_axes{MixerKind::aligned,
                     {BlochVector{0.0, 0.0, 1.0}, BlochVector{0.0, 0.0, -1.0}}, false};
    EXPECT_LE(shifted_commutator_relation(mixer_dense(z_axes, 2), sep_k2), 1e-12);
    EXPECT_LE(shifted_commutator_relation(mixer_dense(transverse_field_mixer(2), 2), sep_k2),
              1e-12);

    std::mt19937_64 rng(89);
    const auto obj = maxcut_objective(random_graph(rng, 4));
    const auto ws = random_warmstart(rng, 4, kPi / 2.0);
    EXPECT_LE(shifted_commutator_relation(mixer_dense(aligned_mixer(ws), 4),
                                          PhaseSeparator::from_objective(obj)),
              1e-12);
}

TEST(DepthBoundRecord, LinearInDeltaLambda) {
    const auto sep = k3_sep();
    const Eigen::MatrixXcd h0 = mixer_dense(transverse_field_mixer(3, true), 3);
    const auto half = pmin(0.5, sep, h0);
    const auto full = pmin(1.0, sep, h0);
    EXPECT_NEAR(full.p_min, 2.0 * half.p_min, 1e-12);
}

TEST(DepthBoundRecord, TracksDeltaLambdaSource) {
    const auto sep = k3_sep();
    const Eigen::MatrixXcd h0 = mixer_dense(transverse_field_mixer(3, true), 3);
    EXPECT_FALSE(pmin(0.5, sep, h0).delta_is_achieved); // hypothetical target
    EXPECT_TRUE(pmin(0.42, sep, h0, "transverse-field-shifted", true).delta_is_achieved);
}

TEST(DepthBoundRecord, SizeGuard) {
    PhaseSeparator sep;
    sep.costs.assign(std::size_t{1} << 11, 0);
    sep.costs[1] = 1;
    sep.c_max = 1;
    EXPECT_THROW(f_of_c(sep), SizeGuardError);       // capped at 10
    EXPECT_THROW(lemma_check(WarmStart::from_bitstring(std::string(11, '0'), 0.1), sep),
                 SizeGuardError);                    // capped at 8
}

// bound validity on full simulated runs, the central property
TEST(BoundAudit, RandomizedRunsNeverBeatTheBound) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 4));
        const auto obj = maxcut_objective(random_graph(rng, n));
        const auto sep = PhaseSeparator::from_objective(obj);

        const bool transverse = rng_below(rng, 2) == 0;
        const bool optimized = rng_below(rng, 2) == 0;
        const auto ws = random_warmstart(rng, n, rng_range(rng, 0.05, kPi / 2.0));
        const Statevector init =
            transverse ? Statevector::uniform_superposition(n) : to_statevector(ws);
        const MixerSpec mixer = transverse ? transverse_field_mixer(n) : aligned_mixer(ws);
        const Eigen::MatrixXcd h0 =
            transverse ? mixer_dense(transverse_field_mixer(n, true), n)
                       : mixer_dense(aligned_mixer(ws, true), n);

        const int p = 1 + static_cast<int>(rng_below(rng, 3));
        QaoaResult run{Statevector(1), 0, 0, {}, 0};
        if (optimized) {
            run = optimize_params(obj, init, mixer, p, 100, rng());
        } else {
            QaoaParams params{p, {}, {}};
            for (int k = 0; k < p; ++k) {
                params.gammas.push_back(rng_range(rng, -2.0 * kPi, 2.0 * kPi));
                params.betas.push_back(rng_range(rng, -kPi, kPi));
            }
            run = run_qaoa(obj, init, mixer, params);
        }

        const double lambda_i =
            lambda_of(expectation_diag(init, cost_diagonal(obj)), obj.c_max);
        const double bound =
            theorem_bound(run.final_state, h0, run.lambda - lambda_i, sep);
        EXPECT_GE(static_cast<double>(p) + 1e-9, bound)
            << "n=" << n << " p=" << p << " transverse=" << transverse;
    }
}

} // namespace
