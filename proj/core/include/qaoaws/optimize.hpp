#pragma once

#include <cstdint>

#include "qaoaws/qaoa.hpp"

namespace qaoaws {

/// Grid used to seed the optimizer: 8 points per parameter dimension,
/// Cartesian product capped at this many seeds (sampled beyond the cap).
inline constexpr int kGridPointsPerDim = 8;
inline constexpr long kMaxGridSeeds = 4096;

/// Derivative-free maximization of <C> over (gamma, beta), gamma in [0, 2pi),
/// beta in [0, pi).
///
/// Coarse grid seeding (always evaluated in full), then Nelder-Mead
/// refinement from the best starts; `budget` caps the refinement
/// evaluations (budget <= 0 selects the default 20*(2p)^2). For p >= 2 the
/// zero-padded optimum of depth p-1 joins the start list, which makes the
/// optimized value monotone in depth. Deterministic for a fixed seed; ties
/// break on first-found order.
QaoaResult optimize_params(const Objective& obj,
                           const Statevector& init,
                           const MixerSpec& mixer,
                           int p,
                           long budget,
                           std::uint64_t seed);

/// Same search with an explicit phase-layer diagonal (see run_qaoa_with_phase).
QaoaResult optimize_params_with_phase(const Objective& obj,
                                      std::span<const std::int64_t> phase_costs,
                                      const Statevector& init,
                                      const MixerSpec& mixer,
                                      int p,
                                      long budget,
                                      std::uint64_t seed);

} // namespace qaoaws
