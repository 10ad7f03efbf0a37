#include "qaoaws/random_instances.hpp"

#include <cmath>
#include <numbers>

#include "qaoaws/errors.hpp"

namespace qaoaws {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    // modulo bias is irrelevant at these ranges; what matters is that the
    // stream is identical on every standard library
    return rng() % n;
}

double rng_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double rng_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * rng_unit(rng);
}

Graph random_graph(std::mt19937_64& rng, int num_vertices, std::int64_t max_weight) {
    if (num_vertices < 2) {
        throw InvalidInputError("random graph needs at least two vertices");
    }
    Graph g;
    g.num_vertices = num_vertices;
    for (int u = 0; u < num_vertices; ++u) {
        for (int v = u + 1; v < num_vertices; ++v) {
            if (rng_below(rng, 2) == 0) {
                const auto w = static_cast<std::int64_t>(
                    1 + rng_below(rng, static_cast<std::uint64_t>(max_weight)));
                g.edges.push_back(Edge{u, v, w});
            }
        }
    }
    if (g.edges.empty()) {
        const int u = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(num_vertices)));
        const int v = (u + 1) % num_vertices;
        g.edges.push_back(Edge{std::min(u, v), std::max(u, v), 1});
    }
    return g;
}

std::string random_bitstring(std::mt19937_64& rng, int num_bits) {
    std::string bits(static_cast<std::size_t>(num_bits), '0');
    for (auto& c : bits) {
        c = rng_below(rng, 2) == 0 ? '0' : '1';
    }
    return bits;
}

WarmStart random_zero_phase_warmstart(std::mt19937_64& rng, int num_qubits, double theta_budget) {
    std::vector<BlochAngles> angles;
    angles.reserve(static_cast<std::size_t>(num_qubits));
    for (int j = 0; j < num_qubits; ++j) {
        const double theta_hat = rng_range(rng, 0.0, theta_budget);
        const bool south = rng_below(rng, 2) == 1;
        angles.push_back({south ? std::numbers::pi - theta_hat : theta_hat, 0.0});
    }
    return WarmStart(std::move(angles));
}

WarmStart random_warmstart(std::mt19937_64& rng, int num_qubits, double theta_budget) {
    std::vector<BlochAngles> angles;
    angles.reserve(static_cast<std::size_t>(num_qubits));
    for (int j = 0; j < num_qubits; ++j) {
        const double theta_hat = rng_range(rng, 0.0, theta_budget);
        const bool south = rng_below(rng, 2) == 1;
        const double phi = rng_range(rng, 0.0, 2.0 * std::numbers::pi);
        angles.push_back({south ? std::numbers::pi - theta_hat : theta_hat, phi});
    }
    return WarmStart(std::move(angles));
}

} // namespace qaoaws
