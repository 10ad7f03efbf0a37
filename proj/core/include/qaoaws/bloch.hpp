#pragma once

#include <cmath>

namespace qaoaws {

inline constexpr double kUnitAxisTol = 1e-12;

/// Cartesian point on the Bloch sphere.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double squared_norm() const { return x * x + y * y + z * z; }

    bool is_unit(double tol = kUnitAxisTol) const {
        return std::abs(squared_norm() - 1.0) <= tol;
    }
};

/// (theta, phi) -> (sin θ cos φ, sin θ sin φ, cos θ).
inline BlochVector bloch_from_polar(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

} // namespace qaoaws
