#include "qaoaws/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "qaoaws/errors.hpp"
#include "qaoaws/random_instances.hpp"

namespace qaoaws {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConvergenceTol = 1e-8; // absolute, in <C>
constexpr int kRefineStarts = 5;

// Flat parameter layout: gammas first, betas second.
QaoaParams params_from_vector(int p, const std::vector<double>& x) {
    QaoaParams params;
    params.p = p;
    params.gammas.assign(x.begin(), x.begin() + p);
    params.betas.assign(x.begin() + p, x.end());
    return params;
}

class Evaluator {
public:
    Evaluator(const Objective& obj, std::span<const std::int64_t> phase_costs,
              const Statevector& init, const MixerSpec& mixer, int p)
        : obj_(obj), phase_costs_(phase_costs), init_(init), mixer_(mixer), p_(p) {}

    double operator()(const std::vector<double>& x) {
        ++evaluations_;
        const double value =
            expectation_diag(run_layers(init_, phase_costs_, mixer_, params_from_vector(p_, x)),
                             cost_diagonal(obj_));
        if (value > best_value_) { // strict: ties keep the first-found point
            best_value_ = value;
            best_x_ = x;
        }
        return value;
    }

    long evaluations() const { return evaluations_; }
    double best_value() const { return best_value_; }
    const std::vector<double>& best_x() const { return best_x_; }

private:
    const Objective& obj_;
    std::span<const std::int64_t> phase_costs_;
    const Statevector& init_;
    const MixerSpec& mixer_;
    int p_;
    long evaluations_ = 0;
    double best_value_ = -std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

std::vector<std::vector<double>> grid_points(int p, std::uint64_t seed) {
    const int dims = 2 * p;
    std::vector<double> gamma_values(kGridPointsPerDim);
    std::vector<double> beta_values(kGridPointsPerDim);
    for (int k = 0; k < kGridPointsPerDim; ++k) {
        gamma_values[static_cast<std::size_t>(k)] = 2.0 * kPi * k / kGridPointsPerDim;
        beta_values[static_cast<std::size_t>(k)] = kPi * k / kGridPointsPerDim;
    }

    double full = std::pow(static_cast<double>(kGridPointsPerDim), dims);
    std::vector<std::vector<double>> points;
    if (full <= static_cast<double>(kMaxGridSeeds)) {
        const long count = static_cast<long>(full);
        points.reserve(static_cast<std::size_t>(count));
        std::vector<int> digits(static_cast<std::size_t>(dims), 0);
        for (long i = 0; i < count; ++i) {
            std::vector<double> x(static_cast<std::size_t>(dims));
            for (int d = 0; d < dims; ++d) {
                const int digit = digits[static_cast<std::size_t>(d)];
                x[static_cast<std::size_t>(d)] =
                    d < p ? gamma_values[static_cast<std::size_t>(digit)]
                          : beta_values[static_cast<std::size_t>(digit)];
            }
            points.push_back(std::move(x));
            for (int d = 0; d < dims; ++d) {
                if (++digits[static_cast<std::size_t>(d)] < kGridPointsPerDim) {
                    break;
                }
                digits[static_cast<std::size_t>(d)] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        points.reserve(static_cast<std::size_t>(kMaxGridSeeds));
        for (long i = 0; i < kMaxGridSeeds; ++i) {
            std::vector<double> x(static_cast<std::size_t>(dims));
            for (int d = 0; d < dims; ++d) {
                const auto digit = static_cast<std::size_t>(
                    rng_below(rng, static_cast<std::uint64_t>(kGridPointsPerDim)));
                x[static_cast<std::size_t>(d)] = d < p ? gamma_values[digit] : beta_values[digit];
            }
            points.push_back(std::move(x));
        }
    }
    return points;
}

// Nelder-Mead maximization (runs on -f internally). Stops when the simplex
// value spread falls below kConvergenceTol or the evaluation cap is reached.
void nelder_mead(Evaluator& eval, const std::vector<double>& x0, long max_evals) {
    const int dims = static_cast<int>(x0.size());
    if (max_evals < dims + 2) {
        return; // not enough budget to build a simplex
    }

    struct Vertex {
        std::vector<double> x;
        double f; // minimized value = -<C>
    };

    long used = 0;
    auto f_of = [&](const std::vector<double>& x) {
        ++used;
        return -eval(x);
    };

    std::vector<Vertex> simplex;
    simplex.reserve(static_cast<std::size_t>(dims) + 1);
    simplex.push_back({x0, f_of(x0)});
    for (int d = 0; d < dims; ++d) {
        std::vector<double> x = x0;
        const double step = d < dims / 2 ? kPi / 16.0 : kPi / 32.0; // quarter grid spacing
        x[static_cast<std::size_t>(d)] += step;
        simplex.push_back({std::move(x), 0.0});
        simplex.back().f = f_of(simplex.back().x);
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    while (used < max_evals) {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        if (simplex.back().f - simplex.front().f <= kConvergenceTol) {
            break;
        }

        std::vector<double> centroid(static_cast<std::size_t>(dims), 0.0);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
            for (int d = 0; d < dims; ++d) {
                centroid[static_cast<std::size_t>(d)] +=
                    simplex[i].x[static_cast<std::size_t>(d)];
            }
        }
        for (auto& c : centroid) {
            c /= static_cast<double>(dims);
        }

        auto blend = [&](double coeff, const std::vector<double>& towards) {
            std::vector<double> x(static_cast<std::size_t>(dims));
            for (int d = 0; d < dims; ++d) {
                x[static_cast<std::size_t>(d)] =
                    centroid[static_cast<std::size_t>(d)] +
                    coeff * (towards[static_cast<std::size_t>(d)] -
                             centroid[static_cast<std::size_t>(d)]);
            }
            return x;
        };

        Vertex& worst = simplex.back();
        std::vector<double> reflected = blend(-alpha, worst.x);
        const double fr = f_of(reflected);
        if (fr < simplex.front().f) {
            if (used >= max_evals) {
                worst = {std::move(reflected), fr};
                continue;
            }
            std::vector<double> expanded = blend(-alpha * gamma, worst.x);
            const double fe = f_of(expanded);
            worst = fe < fr ? Vertex{std::move(expanded), fe} : Vertex{std::move(reflected), fr};
            continue;
        }
        if (fr < simplex[simplex.size() - 2].f) {
            worst = {std::move(reflected), fr};
            continue;
        }
        if (used >= max_evals) {
            break;
        }
        std::vector<double> contracted = blend(rho, worst.x);
        const double fc = f_of(contracted);
        if (fc < worst.f) {
            worst = {std::move(contracted), fc};
            continue;
        }
        // shrink towards the best vertex
        for (std::size_t i = 1; i < simplex.size() && used < max_evals; ++i) {
            for (int d = 0; d < dims; ++d) {
                simplex[i].x[static_cast<std::size_t>(d)] =
                    simplex[0].x[static_cast<std::size_t>(d)] +
                    sigma * (simplex[i].x[static_cast<std::size_t>(d)] -
                             simplex[0].x[static_cast<std::size_t>(d)]);
            }
            simplex[i].f = f_of(simplex[i].x);
        }
    }
}

} // namespace

QaoaResult optimize_params(const Objective& obj,
                           const Statevector& init,
                           const MixerSpec& mixer,
                           int p,
                           long budget,
                           std::uint64_t seed) {
    return optimize_params_with_phase(obj, cost_diagonal(obj), init, mixer, p, budget, seed);
}

QaoaResult optimize_params_with_phase(const Objective& obj,
                                      std::span<const std::int64_t> phase_costs,
                                      const Statevector& init,
                                      const MixerSpec& mixer,
                                      int p,
                                      long budget,
                                      std::uint64_t seed) {
    if (p < 0) {
        throw InvalidInputError("depth must be non-negative");
    }
    if (p == 0) {
        return run_qaoa_with_phase(obj, phase_costs, init, mixer, QaoaParams::zeros(0));
    }
    if (budget <= 0) {
        budget = 20L * (2 * p) * (2 * p);
    }

    Evaluator eval(obj, phase_costs, init, mixer, p);
    long recursed_evals = 0;

    // Zero-padding the depth-(p-1) optimum reproduces its value exactly, so
    // the optimized value never decreases with depth.
    if (p >= 2) {
        QaoaResult sub =
            optimize_params_with_phase(obj, phase_costs, init, mixer, p - 1, budget, seed);
        recursed_evals = sub.evaluations;
        std::vector<double> padded;
        padded.reserve(static_cast<std::size_t>(2 * p));
        padded.insert(padded.end(), sub.params.gammas.begin(), sub.params.gammas.end());
        padded.push_back(0.0);
        padded.insert(padded.end(), sub.params.betas.begin(), sub.params.betas.end());
        padded.push_back(0.0);
        eval(padded);
    }

    const auto grid = grid_points(p, seed);
    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ranked.emplace_back(eval(grid[i]), i);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.first > b.first;
    });

    const int starts = std::min<int>(kRefineStarts, static_cast<int>(ranked.size()));
    const long per_start = starts > 0 ? budget / starts : 0;
    for (int s = 0; s < starts; ++s) {
        nelder_mead(eval, grid[ranked[static_cast<std::size_t>(s)].second], per_start);
    }

    QaoaResult best =
        run_qaoa_with_phase(obj, phase_costs, init, mixer, params_from_vector(p, eval.best_x()));
    best.evaluations = recursed_evals + eval.evaluations() + 1;
    return best;
}

} // namespace qaoaws
