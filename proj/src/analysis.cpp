// SPDX-License-Identifier: Apache-2.0

#include "dirsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace dirsim {

void require_valid(const LinkDistances& d) {
    if (!(d.bs_to_irs1 > 0.0) || !(d.irs_to_irs > 0.0) || !(d.irs2_to_user > 0.0))
        throw std::invalid_argument("link distances must be strictly positive");
}

double double_gain_closed_form(int k1, int k2, const LinkDistances& d, double alpha) {
    require_valid(d);
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("element counts must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const double products = static_cast<double>(k1) * static_cast<double>(k2);
    const double dist = d.irs2_to_user * d.irs_to_irs * d.bs_to_irs1;
    return alpha * alpha * alpha * products * products / (dist * dist);
}

std::pair<int, int> optimal_split(int total_elements) {
    if (total_elements < 2) throw std::invalid_argument("need at least 2 elements to split");
    // K1*(K-K1) is maximized at K/2; for odd K both floor and ceil are optimal.
    const int k1 = total_elements / 2;
    return {k1, total_elements - k1};
}

double optimal_double_gain(int total_elements, const LinkDistances& d, double alpha) {
    require_valid(d);
    if (total_elements < 2) throw std::invalid_argument("need at least 2 elements");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const double k = static_cast<double>(total_elements);
    const double dist = 4.0 * d.irs2_to_user * d.irs_to_irs * d.bs_to_irs1;
    return alpha * alpha * alpha * k * k * k * k / (dist * dist);
}

double single_gain_closed_form(int total_elements, const LinkDistances& d, double alpha) {
    require_valid(d);
    if (total_elements < 1) throw std::invalid_argument("element count must be positive");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    const double k = static_cast<double>(total_elements);
    const double dist = d.irs2_to_user * d.irs_to_irs;
    return alpha * alpha * k * k / (dist * dist);
}

double crossover_elements(double alpha, double bs_to_irs1) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(bs_to_irs1 > 0.0)) throw std::invalid_argument("bs_to_irs1 must be positive");
    return 4.0 * bs_to_irs1 / std::sqrt(alpha);
}

}  // namespace dirsim
