// SPDX-License-Identifier: Apache-2.0

#include "dirsim/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace dirsim {

namespace {

constexpr double kUnitModulusTol = 1e-12;

void require_same_size(Eigen::Index a, Eigen::Index b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("size mismatch in ") + what);
}

std::complex<double> unit_phase(const std::complex<double>& v, const char* what) {
    const double mag = std::abs(v);
    if (!(mag > 0.0))
        throw std::domain_error(std::string(what) + ": zero channel entry, phase undefined");
    return v / mag;
}

}  // namespace

ReflectionConfig::ReflectionConfig(Eigen::VectorXcd coefficients)
    : coefficients_(std::move(coefficients)) {
    for (Eigen::Index k = 0; k < coefficients_.size(); ++k) {
        if (std::abs(std::abs(coefficients_[k]) - 1.0) > kUnitModulusTol)
            throw std::invalid_argument("reflection coefficient " + std::to_string(k + 1) +
                                        " is not unit modulus");
    }
}

ReflectionConfig irs1_phases(const Eigen::VectorXcd& g1, const ChannelVector& t) {
    require_same_size(g1.size(), t.size(), "irs1_phases");
    Eigen::VectorXcd phi(t.size());
    for (Eigen::Index k = 0; k < t.size(); ++k)
        phi[k] = std::conj(g1[k] * unit_phase(t[k], "irs1_phases"));
    return ReflectionConfig(std::move(phi));
}

ReflectionConfig irs2_phases(const Eigen::VectorXcd& g2, const ChannelVector& r) {
    require_same_size(g2.size(), r.size(), "irs2_phases");
    Eigen::VectorXcd phi(r.size());
    for (Eigen::Index k = 0; k < r.size(); ++k)
        phi[k] = std::conj(unit_phase(r[k], "irs2_phases") * g2[k]);
    return ReflectionConfig(std::move(phi));
}

ReflectionConfig single_irs_phases(const ChannelVector& t, const ChannelVector& r) {
    require_same_size(t.size(), r.size(), "single_irs_phases");
    Eigen::VectorXcd phi(t.size());
    for (Eigen::Index k = 0; k < t.size(); ++k)
        phi[k] = std::conj(unit_phase(r[k], "single_irs_phases") *
                           unit_phase(t[k], "single_irs_phases"));
    return ReflectionConfig(std::move(phi));
}

EffectiveChannel cascade_double(const ChannelVector& r, const ReflectionConfig& phi2,
                                const ChannelMatrix& S, const ReflectionConfig& phi1,
                                const ChannelVector& t) {
    require_same_size(phi1.size(), t.size(), "cascade_double (phi1, t)");
    require_same_size(S.cols(), t.size(), "cascade_double (S, t)");
    require_same_size(phi2.size(), r.size(), "cascade_double (phi2, r)");
    require_same_size(S.rows(), r.size(), "cascade_double (r, S)");
    const Eigen::VectorXcd incident = phi1.coefficients().cwiseProduct(t);
    const Eigen::VectorXcd at_rx = S * incident;
    // Bilinear form, no conjugation (Eigen's dot() would conjugate).
    const std::complex<double> h =
        r.cwiseProduct(phi2.coefficients()).cwiseProduct(at_rx).sum();
    return EffectiveChannel{h, std::norm(h)};
}

EffectiveChannel cascade_single(const ChannelVector& r, const ReflectionConfig& phi,
                                const ChannelVector& t) {
    require_same_size(phi.size(), t.size(), "cascade_single (phi, t)");
    require_same_size(r.size(), t.size(), "cascade_single (r, t)");
    const std::complex<double> h = r.cwiseProduct(phi.coefficients()).cwiseProduct(t).sum();
    return EffectiveChannel{h, std::norm(h)};
}

}  // namespace dirsim
