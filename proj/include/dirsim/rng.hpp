// SPDX-License-Identifier: Apache-2.0
//
// Seeded substreams for Monte Carlo draws. Reproducibility contract: a given
// (seed, stream_id) pair yields the same draw sequence on every conforming
// platform. To keep that true the whole pipeline is pinned to algorithms the
// C++ standard specifies bit-exactly:
//
//   engine    std::mt19937_64 seeded through std::seed_seq over the four
//             32-bit words of (seed, stream_id)
//   uniform   u = (next() >> 11) * 2^-53            in [0, 1)
//   normal    Box-Muller on one uniform pair:
//             z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = ... sin(2 pi u2)
//             (u1 is drawn from (0, 1] so the log is finite)
//   CN(0,1)   (z0 + j z1) / sqrt(2), i.e. one Box-Muller pair per draw
//
// std::normal_distribution is deliberately not used: its algorithm is
// implementation-defined.

#ifndef DIRSIM_RNG_HPP
#define DIRSIM_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace dirsim {

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    double uniform();          // [0, 1), 53-bit resolution
    double standard_normal();  // N(0, 1); Box-Muller, spare variate cached
    std::complex<double> complex_normal();  // CN(0, 1), unit total variance

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace dirsim

#endif  // DIRSIM_RNG_HPP
