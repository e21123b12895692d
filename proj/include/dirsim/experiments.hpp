// SPDX-License-Identifier: Apache-2.0
//
// Experiment drivers: the split sweep (received SNR versus the first panel's
// element count, against the closed forms and the single-panel benchmark),
// the Rician fading Monte Carlo study, the doubling-delta probe of the
// scaling exponents, and the crossover search for the element budget where
// the double-reflection deployment overtakes the single panel.
//
// Determinism: every result is a pure function of (scenario, parameters,
// seed). Stochastic trials draw from per-trial substreams and results are
// assembled keyed by trial index, so the parallelism degree (DIRSIM_THREADS
// or hardware concurrency) never changes any output value.

#ifndef DIRSIM_EXPERIMENTS_HPP
#define DIRSIM_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dirsim/analysis.hpp"
#include "dirsim/beamforming.hpp"
#include "dirsim/scenario.hpp"

namespace dirsim {

// Gamma = P |h|^2 / sigma^2, in dB. A zero-power channel reports -inf
// rather than throwing.
double received_snr_db(const EffectiveChannel& h, double tx_power_dbm,
                       double noise_power_dbm);
double received_snr_db(double power_gain, double tx_power_dbm, double noise_power_dbm);

// Anchor-based distances of the double-reflection link.
LinkDistances link_distances(const ScenarioConfig& scenario);

// Re-grid the two panel templates for the requested element budgets. Counts
// factor as count_a = largest divisor <= sqrt(K) so panels stay near-square.
std::pair<PanelGeometry, PanelGeometry> build_panels(const ScenarioConfig& scenario, int k1,
                                                     int k2);

// The single-panel benchmark: all K elements on the second panel's site.
PanelGeometry single_irs_panel(const ScenarioConfig& scenario, int total_elements);

// Exact LoS evaluations used by every study below: synthesize the exact
// channels, apply the signature-model beamformers (double) or the
// entry-alignment beamformer (single), and evaluate the cascade.
EffectiveChannel double_irs_channel_los(const ScenarioConfig& scenario, int k1, int k2);
EffectiveChannel single_irs_channel_los(const ScenarioConfig& scenario, int total_elements);

struct SweepRow {
    int k1 = 0;
    int k2 = 0;
    double snr_exact_db = 0.0;
    double snr_closed_db = 0.0;
    double snr_single_db = 0.0;
};

struct SweepResult {
    int total_elements = 0;
    std::uint64_t seed = 0;
    std::string scenario_digest;
    std::vector<SweepRow> rows;  // sorted by k1; k1 + k2 == total_elements
};

// Rows at k1 = step, 2*step, ..., total-step. The single-panel benchmark is
// evaluated once per sweep and repeated on every row.
SweepResult run_split_sweep(const ScenarioConfig& scenario, int total_elements, int step,
                            std::uint64_t seed);

struct McResult {
    double tau = 0.0;  // +inf means pure LoS
    int trials = 0;
    std::string case_label;  // "double" or "single"
    double mean_snr_db = 0.0;  // 10 log10 of the mean linear SNR
    double std_err_db = 0.0;   // delta-method standard error of the mean
    std::vector<double> per_trial_snr_db;
};

// Per tau: `trials` draws of the Rician inter-panel channel with the
// two-panel beamformers held at their LoS signature design, and `trials`
// draws of the benchmark with a Rician BS-side channel re-aligned per
// realization. Emits one "double" and one "single" row per tau, in input
// order.
std::vector<McResult> run_rician_study(const ScenarioConfig& scenario, int k1, int k2,
                                       const std::vector<double>& taus, int trials,
                                       std::uint64_t seed);

struct DoublingDeltas {
    int k_small = 0;
    double snr_single_small_db = 0.0;
    double snr_single_large_db = 0.0;
    double snr_double_small_db = 0.0;
    double snr_double_large_db = 0.0;
    double delta_single_db = 0.0;
    double delta_double_db = 0.0;
};

// Exact-simulation SNR gain from doubling the element budget, at the optimal
// split (double case) and all-on-one-panel (single case).
DoublingDeltas run_doubling_deltas(const ScenarioConfig& scenario, int k_small,
                                   std::uint64_t seed);

struct CrossoverPoint {
    int k = 0;
    double snr_double_db = 0.0;
    double snr_single_db = 0.0;
};

struct CrossoverResult {
    enum class Status { found, at_lower_boundary, not_found };
    Status status = Status::not_found;
    double k_star = 0.0;  // interpolated crossing, valid unless not_found
    std::vector<CrossoverPoint> scan;  // every evaluated K, ascending
};

// Scan even K in [k_min, k_max] (step rounded up to even) for the smallest K
// where the exact double-reflection SNR at the optimal split reaches the
// exact single-panel SNR; k_star interpolates the dB gap's zero crossing
// between the bracketing scan points.
CrossoverResult run_crossover_search(const ScenarioConfig& scenario, int k_min, int k_max,
                                     int step);

}  // namespace dirsim

#endif  // DIRSIM_EXPERIMENTS_HPP
