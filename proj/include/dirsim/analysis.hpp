// SPDX-License-Identifier: Apache-2.0
//
// Closed-form power-scaling predictions for the double- and single-panel
// deployments, the optimal element split, and the element count at which
// the double-reflection link overtakes the single one. All gains are linear
// power ratios; convert to dB only at reporting boundaries.

#ifndef DIRSIM_ANALYSIS_HPP
#define DIRSIM_ANALYSIS_HPP

#include <utility>

namespace dirsim {

struct LinkDistances {
    double bs_to_irs1 = 0.0;   // BS to first panel anchor, m
    double irs_to_irs = 0.0;   // anchor-to-anchor, m
    double irs2_to_user = 0.0; // second panel anchor to user, m
};

void require_valid(const LinkDistances& d);

// |h|^2 ~= alpha^3 (K1 K2)^2 / (d_r d_S d_t)^2
double double_gain_closed_form(int k1, int k2, const LinkDistances& d, double alpha);

// Integer split of K that maximizes (K1*K2)^2; ties broken as (smaller, larger).
std::pair<int, int> optimal_split(int total_elements);

// |h|^2 at the optimal split: alpha^3 K^4 / (4 d_r d_S d_t)^2
double optimal_double_gain(int total_elements, const LinkDistances& d, double alpha);

// Single-panel benchmark |h|^2 ~= alpha^2 K^2 / (d_r d_S)^2, the BS-to-panel
// distance approximated by the anchor-to-anchor distance.
double single_gain_closed_form(int total_elements, const LinkDistances& d, double alpha);

// Element count at which the optimal double gain equals the single-panel
// gain: K* = 4 d_t / sqrt(alpha) (the literature's 4/sqrt(alpha) assumes
// d_t = 1 m).
double crossover_elements(double alpha, double bs_to_irs1);

}  // namespace dirsim

#endif  // DIRSIM_ANALYSIS_HPP
