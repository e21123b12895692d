// SPDX-License-Identifier: Apache-2.0

#include "dirsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> los_entry(double dist, double wavelength, double amp_scale) {
    return std::polar(amp_scale / dist, -kTwoPi * dist / wavelength);
}

// Weights (sqrt(tau/(tau+1)), sqrt(1/(tau+1))); tau = +inf maps to (1, 0).
std::pair<double, double> rician_weights(double tau) {
    if (std::isnan(tau) || tau < 0.0)
        throw std::domain_error("Rician factor must be >= 0 or infinite");
    if (std::isinf(tau)) return {1.0, 0.0};
    return {std::sqrt(tau / (tau + 1.0)), std::sqrt(1.0 / (tau + 1.0))};
}

}  // namespace

PropagationParams PropagationParams::free_space(double wavelength) {
    const double g = wavelength / (4.0 * std::numbers::pi);
    return PropagationParams{wavelength, g * g};
}

void require_valid(const PropagationParams& prop) {
    if (!(prop.wavelength > 0.0) || !std::isfinite(prop.wavelength))
        throw std::invalid_argument("wavelength must be positive");
    if (!(prop.ref_gain > 0.0) || !std::isfinite(prop.ref_gain))
        throw std::invalid_argument("ref_gain must be positive");
}

ChannelVector los_vector(const PanelGeometry& panel, const Point3& point,
                         const PropagationParams& prop) {
    require_valid(panel);
    require_valid(prop);
    const double amp = std::sqrt(prop.ref_gain);
    const auto positions = element_positions(panel);
    ChannelVector v(positions.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double d = distance(point, positions[static_cast<std::size_t>(k)]);
        if (!(d > 0.0))
            throw std::domain_error("point coincides with panel element, path loss undefined");
        v[k] = los_entry(d, prop.wavelength, amp);
    }
    return v;
}

ChannelMatrix los_matrix_exact(const PanelGeometry& tx_panel, const PanelGeometry& rx_panel,
                               const PropagationParams& prop) {
    require_valid(tx_panel);
    require_valid(rx_panel);
    require_valid(prop);
    const double amp = std::sqrt(prop.ref_gain);
    const auto tx_pos = element_positions(tx_panel);
    const auto rx_pos = element_positions(rx_panel);
    ChannelMatrix m(rx_pos.size(), tx_pos.size());
    for (std::size_t k1 = 0; k1 < tx_pos.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < rx_pos.size(); ++k2) {
            const double d = distance(rx_pos[k2], tx_pos[k1]);
            if (!(d > 0.0)) throw std::domain_error("panels overlap: coincident elements");
            m(static_cast<Eigen::Index>(k2), static_cast<Eigen::Index>(k1)) =
                los_entry(d, prop.wavelength, amp);
        }
    }
    return m;
}

SignatureDecomposition signature_decomposition(const PanelGeometry& tx_panel,
                                               const PanelGeometry& rx_panel,
                                               const PropagationParams& prop) {
    require_valid(tx_panel);
    require_valid(rx_panel);
    require_valid(prop);
    const Point3 span = rx_panel.anchor - tx_panel.anchor;
    const double d = norm(span);
    if (!(d > 0.0)) throw std::domain_error("panel anchors coincide");

    const AnglePair tx_angles = boresight_angles(tx_panel, span);
    const AnglePair rx_angles = boresight_angles(rx_panel, span);

    const auto signature = [&](const PanelGeometry& panel, const AnglePair& ang, double sign) {
        Eigen::VectorXcd g(panel.size());
        const double ca = std::cos(ang.omega_a);
        const double cb = std::cos(ang.omega_b);
        Eigen::Index k = 0;
        for (int kb = 0; kb < panel.count_b; ++kb)
            for (int ka = 0; ka < panel.count_a; ++ka)
                g[k++] = std::polar(
                    1.0, sign * kTwoPi * (ka * panel.spacing * ca + kb * panel.spacing * cb) /
                             prop.wavelength);
        return g;
    };

    SignatureDecomposition dec;
    dec.g1 = signature(tx_panel, tx_angles, +1.0);
    dec.g2 = signature(rx_panel, rx_angles, -1.0);
    dec.scale = std::polar(std::sqrt(prop.ref_gain) / d, -kTwoPi * d / prop.wavelength);
    return dec;
}

ChannelMatrix far_field_matrix(const SignatureDecomposition& dec) {
    return dec.scale * (dec.g2 * dec.g1.transpose());
}

double rank_one_margin(const PanelGeometry& rx_panel, double inter_anchor_distance,
                       const PropagationParams& prop) {
    require_valid(rx_panel);
    require_valid(prop);
    if (!(inter_anchor_distance > 0.0))
        throw std::domain_error("inter-anchor distance must be positive");
    const double threshold =
        std::sqrt(static_cast<double>(rx_panel.size())) * rx_panel.spacing * rx_panel.spacing /
        prop.wavelength;
    return inter_anchor_distance / threshold;
}

ChannelMatrix rayleigh_matrix(const PanelGeometry& tx_panel, const PanelGeometry& rx_panel,
                              const PropagationParams& prop, RngStream& rng) {
    require_valid(tx_panel);
    require_valid(rx_panel);
    require_valid(prop);
    const double amp = std::sqrt(prop.ref_gain);
    const auto tx_pos = element_positions(tx_panel);
    const auto rx_pos = element_positions(rx_panel);
    ChannelMatrix m(rx_pos.size(), tx_pos.size());
    // Draw order is fixed: column-major, i.e. k1 outer, k2 inner.
    for (std::size_t k1 = 0; k1 < tx_pos.size(); ++k1) {
        for (std::size_t k2 = 0; k2 < rx_pos.size(); ++k2) {
            const double d = distance(rx_pos[k2], tx_pos[k1]);
            if (!(d > 0.0)) throw std::domain_error("panels overlap: coincident elements");
            m(static_cast<Eigen::Index>(k2), static_cast<Eigen::Index>(k1)) =
                (amp / d) * rng.complex_normal();
        }
    }
    return m;
}

ChannelVector rayleigh_vector(const PanelGeometry& panel, const Point3& point,
                              const PropagationParams& prop, RngStream& rng) {
    require_valid(panel);
    require_valid(prop);
    const double amp = std::sqrt(prop.ref_gain);
    const auto positions = element_positions(panel);
    ChannelVector v(positions.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double d = distance(point, positions[static_cast<std::size_t>(k)]);
        if (!(d > 0.0))
            throw std::domain_error("point coincides with panel element, path loss undefined");
        v[k] = (amp / d) * rng.complex_normal();
    }
    return v;
}

ChannelMatrix rician_matrix(const ChannelMatrix& los, double tau, RngStream& rng) {
    const auto [w_los, w_ray] = rician_weights(tau);
    if (w_ray == 0.0) return los;
    ChannelMatrix m(los.rows(), los.cols());
    for (Eigen::Index c = 0; c < los.cols(); ++c)
        for (Eigen::Index r = 0; r < los.rows(); ++r)
            m(r, c) = w_los * los(r, c) + w_ray * std::abs(los(r, c)) * rng.complex_normal();
    return m;
}

ChannelVector rician_vector(const ChannelVector& los, double tau, RngStream& rng) {
    const auto [w_los, w_ray] = rician_weights(tau);
    if (w_ray == 0.0) return los;
    ChannelVector v(los.size());
    for (Eigen::Index k = 0; k < los.size(); ++k)
        v[k] = w_los * los[k] + w_ray * std::abs(los[k]) * rng.complex_normal();
    return v;
}

ChannelMatrix rician_matrix(const PanelGeometry& tx_panel, const PanelGeometry& rx_panel,
                            const PropagationParams& prop, double tau, RngStream& rng) {
    rician_weights(tau);  // validate before any synthesis work
    return rician_matrix(los_matrix_exact(tx_panel, rx_panel, prop), tau, rng);
}

ChannelVector rician_vector(const PanelGeometry& panel, const Point3& point,
                            const PropagationParams& prop, double tau, RngStream& rng) {
    rician_weights(tau);
    return rician_vector(los_vector(panel, point, prop), tau, rng);
}

}  // namespace dirsim
