#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "qaoaws/graph.hpp"

namespace qaoaws {

/// Objective statistics come from exhaustive evaluation; refuse beyond this.
inline constexpr int kMaxBruteForceQubits = 20;

/// A classical objective c : {0,1}^n -> Z>=0 to be maximized, stored as its
/// full value table (little-endian bitstring -> index), together with the
/// brute-force ground truth: c_max, c_avg and the set of maximizers.
struct Objective {
    int num_bits = 0;
    std::vector<std::int64_t> values; // size 2^num_bits
    std::int64_t c_max = 0;
    double c_avg = 0.0;
    std::vector<std::uint64_t> maximizers;

    std::int64_t operator()(std::uint64_t x) const { return values[x]; }

    /// Validates (non-negative, not identically zero, 2^n entries) and
    /// computes the stats.
    static Objective from_values(int num_bits, std::vector<std::int64_t> values);
};

/// c(x) = sum over edges w * [x_u != x_v].
Objective maxcut_objective(const Graph& g);

/// The single-qubit objective c(x) = x: values (0, 1), c_max = 1, c_avg = 1/2.
Objective toy_objective();

/// JSON value table: {"n": int, "values": [2^n non-negative integers]}.
Objective parse_objective_table(std::string_view json_text);

Objective load_objective_table(const std::filesystem::path& path);

/// The diagonal of the cost Hamiltonian C (C|b> = c(b)|b>) in the
/// little-endian basis order. A view into the objective's value table.
std::span<const std::int64_t> cost_diagonal(const Objective& obj);

} // namespace qaoaws
