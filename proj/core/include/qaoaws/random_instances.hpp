#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qaoaws/graph.hpp"
#include "qaoaws/warm_start.hpp"

namespace qaoaws {

// Seeded random instances for the verification suite and randomized tests.
// All draws go through the helpers below (not std::*_distribution), so a
// fixed seed reproduces the same instances on any standard library.

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n); // [0, n)
double rng_unit(std::mt19937_64& rng);                          // [0, 1)
double rng_range(std::mt19937_64& rng, double lo, double hi);

/// Random graph: each pair an edge with probability ~1/2, integer weights in
/// [1, max_weight]; at least one edge.
Graph random_graph(std::mt19937_64& rng, int num_vertices, std::int64_t max_weight = 3);

std::string random_bitstring(std::mt19937_64& rng, int num_bits);

/// Zero-phase warm start with every theta_hat uniform in [0, theta_budget]
/// and a random hemisphere per qubit.
WarmStart random_zero_phase_warmstart(std::mt19937_64& rng, int num_qubits, double theta_budget);

/// As above but with random azimuths in [0, 2pi).
WarmStart random_warmstart(std::mt19937_64& rng, int num_qubits, double theta_budget);

} // namespace qaoaws
