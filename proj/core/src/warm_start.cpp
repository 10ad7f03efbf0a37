#include "qaoaws/warm_start.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qaoaws/errors.hpp"

namespace qaoaws {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    return w == kTwoPi ? 0.0 : w;
}

} // namespace

WarmStart::WarmStart(std::vector<BlochAngles> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw InvalidInputError("warm start needs at least one qubit");
    }
    for (auto& a : angles_) {
        if (!std::isfinite(a.theta) || !std::isfinite(a.phi)) {
            throw InvalidInputError("non-finite warm-start angle");
        }
        if (a.theta < 0.0 || a.theta > kPi) {
            throw InvalidInputError("polar angle must lie in [0, pi]");
        }
        a.phi = wrap_phi(a.phi);
    }
}

WarmStart WarmStart::from_bitstring(std::string_view bits, double theta) {
    if (bits.empty()) {
        throw InvalidInputError("empty bitstring");
    }
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi / 2.0) {
        throw InvalidInputError("theta must lie in [0, pi/2]");
    }
    std::vector<BlochAngles> angles;
    angles.reserve(bits.size());
    for (char c : bits) {
        if (c == '0') {
            angles.push_back({theta, 0.0});
        } else if (c == '1') {
            angles.push_back({kPi - theta, 0.0});
        } else {
            throw InvalidInputError("bitstring may contain only '0' and '1'");
        }
    }
    return WarmStart(std::move(angles));
}

double WarmStart::theta_hat(int j) const {
    const double theta = angles_[static_cast<std::size_t>(j)].theta;
    return std::min(theta, kPi - theta);
}

double WarmStart::max_theta_hat() const {
    double m = 0.0;
    for (int j = 0; j < num_qubits(); ++j) {
        m = std::max(m, theta_hat(j));
    }
    return m;
}

bool WarmStart::is_within_theta(double theta, double tol) const {
    for (int j = 0; j < num_qubits(); ++j) {
        if (theta_hat(j) > theta + tol) {
            return false;
        }
    }
    return true;
}

bool WarmStart::is_at_theta(double theta, double tol) const {
    for (int j = 0; j < num_qubits(); ++j) {
        if (std::abs(theta_hat(j) - theta) > tol) {
            return false;
        }
    }
    return true;
}

std::string WarmStart::corresponding_bitstring() const {
    std::string bits(static_cast<std::size_t>(num_qubits()), '0');
    for (int j = 0; j < num_qubits(); ++j) {
        if (angles_[static_cast<std::size_t>(j)].theta > kPi / 2.0) {
            bits[static_cast<std::size_t>(j)] = '1';
        }
    }
    return bits;
}

Statevector to_statevector(const WarmStart& ws) {
    const int n = ws.num_qubits();
    std::vector<cx_double> zero(static_cast<std::size_t>(n));
    std::vector<cx_double> one(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& a = ws.angles()[static_cast<std::size_t>(j)];
        zero[static_cast<std::size_t>(j)] = cx_double{std::cos(a.theta / 2.0), 0.0};
        one[static_cast<std::size_t>(j)] =
            std::polar(std::sin(a.theta / 2.0), a.phi);
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cx_double> amps(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        cx_double amp{1.0, 0.0};
        for (int j = 0; j < n; ++j) {
            amp *= (k >> j) & 1 ? one[static_cast<std::size_t>(j)]
                                : zero[static_cast<std::size_t>(j)];
        }
        amps[k] = amp;
    }
    return Statevector(n, std::move(amps));
}

WarmStart zero_phase_equivalent(const WarmStart& ws) {
    std::vector<BlochAngles> angles = ws.angles();
    for (auto& a : angles) {
        a.phi = 0.0;
    }
    return WarmStart(std::move(angles));
}

MixerSpec aligned_mixer(const WarmStart& ws, bool shifted) {
    MixerSpec spec;
    spec.kind = MixerKind::aligned;
    spec.shifted = shifted;
    spec.axes.reserve(static_cast<std::size_t>(ws.num_qubits()));
    for (const auto& a : ws.angles()) {
        spec.axes.push_back(bloch_from_polar(a.theta, a.phi));
    }
    return spec;
}

WarmStart parse_warmstart(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("bitstring")) {
        if (!doc.contains("theta") || !doc["theta"].is_number()) {
            throw ParseError("bitstring warm start needs a numeric 'theta'");
        }
        return WarmStart::from_bitstring(doc["bitstring"].get<std::string>(),
                                         doc["theta"].get<double>());
    }
    if (doc.is_object() && doc.contains("angles")) {
        if (!doc["angles"].is_array() || doc["angles"].empty()) {
            throw ParseError("'angles' must be a non-empty array of [theta, phi] pairs");
        }
        std::vector<BlochAngles> angles;
        angles.reserve(doc["angles"].size());
        for (const auto& pair : doc["angles"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number()) {
                throw ParseError("'angles' entries must be [theta, phi] number pairs");
            }
            angles.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        return WarmStart(std::move(angles));
    }
    throw ParseError("warm start must contain 'bitstring'+'theta' or 'angles'");
}

WarmStart load_warmstart(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open warm-start file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_warmstart(buffer.str());
}

} // namespace qaoaws
