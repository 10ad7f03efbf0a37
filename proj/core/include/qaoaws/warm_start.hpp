#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qaoaws/mixer.hpp"
#include "qaoaws/statevector.hpp"

namespace qaoaws {

inline constexpr double kAngleClassifyTol = 1e-12;

/// Bloch angles of one qubit: polar theta in [0, pi], azimuth phi in [0, 2pi).
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// A product initial state given per qubit by
///   |s_j> = cos(theta_j/2)|0> + e^{i phi_j} sin(theta_j/2)|1>.
///
/// theta_hat(j) = min(theta_j, pi - theta_j) measures the distance to the
/// nearest pole; a warm start is within-theta if every theta_hat <= theta and
/// at-theta if every theta_hat equals theta.
class WarmStart {
public:
    explicit WarmStart(std::vector<BlochAngles> angles);

    /// Qubit j sits at polar theta if b_j = '0', else pi - theta; all
    /// azimuths zero. theta must lie in [0, pi/2].
    static WarmStart from_bitstring(std::string_view bits, double theta);

    int num_qubits() const { return static_cast<int>(angles_.size()); }
    const std::vector<BlochAngles>& angles() const { return angles_; }

    double theta_hat(int j) const;
    double max_theta_hat() const;

    bool is_within_theta(double theta, double tol = kAngleClassifyTol) const;
    bool is_at_theta(double theta, double tol = kAngleClassifyTol) const;

    /// b_j = 0 when qubit j is in the northern hemisphere (theta_j <= pi/2).
    std::string corresponding_bitstring() const;

private:
    std::vector<BlochAngles> angles_;
};

/// Tensor product of the per-qubit states; unit norm.
Statevector to_statevector(const WarmStart& ws);

/// Same polar angles, all azimuths zero. QAOA with aligned mixers produces
/// the same measurement statistics from either state.
WarmStart zero_phase_equivalent(const WarmStart& ws);

/// Mixer whose per-qubit axes coincide with the warm-start qubit positions:
/// B_|s> |s> = n |s> and the shifted form annihilates |s>.
MixerSpec aligned_mixer(const WarmStart& ws, bool shifted = false);

/// JSON input, either {"bitstring": "0101...", "theta": f} or
/// {"angles": [[theta, phi], ...]}.
WarmStart parse_warmstart(std::string_view json_text);

WarmStart load_warmstart(const std::filesystem::path& path);

} // namespace qaoaws
