// SPDX-License-Identifier: Apache-2.0
//
// Passive beamforming: unit-modulus per-element reflection coefficients and
// the cascaded effective channels they produce. The two-panel design aligns
// the cascade through the rank-one signature model (first panel beams at the
// second panel's anchor, second panel beams at the user); the single-panel
// design aligns every summand of r^T Phi t to the positive real axis.

#ifndef DIRSIM_BEAMFORMING_HPP
#define DIRSIM_BEAMFORMING_HPP

#include <complex>

#include "dirsim/channel.hpp"

namespace dirsim {

// The diagonal of a reflection coefficient matrix. Construction enforces
// |coefficient| = 1 within 1e-12 on every entry (throws otherwise).
class ReflectionConfig {
public:
    explicit ReflectionConfig(Eigen::VectorXcd coefficients);

    const Eigen::VectorXcd& coefficients() const { return coefficients_; }
    Eigen::Index size() const { return coefficients_.size(); }

private:
    Eigen::VectorXcd coefficients_;
};

struct EffectiveChannel {
    std::complex<double> value{0.0, 0.0};
    double power_gain = 0.0;  // |value|^2
};

// phi_k = ((g1)_k (t)_k / |(t)_k|)^*   -- first panel, beams toward the
// second panel's anchor. Zero channel entries leave the phase undefined and
// throw std::domain_error.
ReflectionConfig irs1_phases(const Eigen::VectorXcd& g1, const ChannelVector& t);

// phi_k = ((r)_k (g2)_k / |(r)_k|)^*   -- second panel, beams toward the user.
ReflectionConfig irs2_phases(const Eigen::VectorXcd& g2, const ChannelVector& r);

// phi_k = ((r)_k (t)_k / (|(r)_k| |(t)_k|))^*  -- single panel, aligns every
// summand of the cascade to a positive real.
ReflectionConfig single_irs_phases(const ChannelVector& t, const ChannelVector& r);

// h = r^T Phi2 S Phi1 t, evaluated right-to-left in O(K1*K2) time without
// materializing intermediate matrices.
EffectiveChannel cascade_double(const ChannelVector& r, const ReflectionConfig& phi2,
                                const ChannelMatrix& S, const ReflectionConfig& phi1,
                                const ChannelVector& t);

// h = r^T Phi t
EffectiveChannel cascade_single(const ChannelVector& r, const ReflectionConfig& phi,
                                const ChannelVector& t);

}  // namespace dirsim

#endif  // DIRSIM_BEAMFORMING_HPP
