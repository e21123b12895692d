// SPDX-License-Identifier: Apache-2.0

#include "dirsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dirsim {

namespace {

int parallelism() {
    if (const char* env = std::getenv("DIRSIM_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static striping over [0, n); fn(i) must only touch its own slot. The
// assignment of items to threads carries no state, so results match the
// sequential order bit for bit.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(parallelism()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// count_a = largest divisor of k not exceeding sqrt(k).
std::pair<int, int> near_square_grid(int k) {
    int best = 1;
    for (int d = 1; static_cast<long long>(d) * d <= k; ++d)
        if (k % d == 0) best = d;
    return {best, k / best};
}

PanelGeometry regrid(const PanelGeometry& tmpl, int count) {
    PanelGeometry panel = tmpl;
    const auto [ca, cb] = near_square_grid(count);
    panel.count_a = ca;
    panel.count_b = cb;
    require_valid(panel);
    return panel;
}

struct DoubleLinkLos {
    PanelGeometry irs1;
    PanelGeometry irs2;
    ChannelVector t;
    ChannelVector r;
    ChannelMatrix s_los;
    ReflectionConfig phi1;
    ReflectionConfig phi2;
};

DoubleLinkLos make_double_link(const ScenarioConfig& scenario, int k1, int k2) {
    auto [irs1, irs2] = build_panels(scenario, k1, k2);
    ChannelVector t = los_vector(irs1, scenario.bs_pos, scenario.prop);
    ChannelVector r = los_vector(irs2, scenario.user_pos, scenario.prop);
    ChannelMatrix s = los_matrix_exact(irs1, irs2, scenario.prop);
    const SignatureDecomposition dec = signature_decomposition(irs1, irs2, scenario.prop);
    ReflectionConfig phi1 = irs1_phases(dec.g1, t);
    ReflectionConfig phi2 = irs2_phases(dec.g2, r);
    return DoubleLinkLos{std::move(irs1), std::move(irs2), std::move(t), std::move(r),
                         std::move(s),    std::move(phi1), std::move(phi2)};
}

double mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (const double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

// Mean linear gain and the delta-method standard error of its dB image.
std::pair<double, double> mean_and_db_stderr(const std::vector<double>& gains) {
    const double m = mean(gains);
    if (!(m > 0.0)) return {0.0, 0.0};
    double ss = 0.0;
    for (const double g : gains) ss += (g - m) * (g - m);
    const double n = static_cast<double>(gains.size());
    const double se_linear = gains.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return {m, 10.0 / std::log(10.0) * se_linear / m};
}

}  // namespace

double received_snr_db(double power_gain, double tx_power_dbm, double noise_power_dbm) {
    if (!(power_gain > 0.0)) return -std::numeric_limits<double>::infinity();
    return tx_power_dbm - noise_power_dbm + 10.0 * std::log10(power_gain);
}

double received_snr_db(const EffectiveChannel& h, double tx_power_dbm,
                       double noise_power_dbm) {
    return received_snr_db(h.power_gain, tx_power_dbm, noise_power_dbm);
}

LinkDistances link_distances(const ScenarioConfig& scenario) {
    return LinkDistances{distance(scenario.irs1.anchor, scenario.bs_pos),
                         distance(scenario.irs2.anchor, scenario.irs1.anchor),
                         distance(scenario.user_pos, scenario.irs2.anchor)};
}

std::pair<PanelGeometry, PanelGeometry> build_panels(const ScenarioConfig& scenario, int k1,
                                                     int k2) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("element counts must be >= 1");
    return {regrid(scenario.irs1, k1), regrid(scenario.irs2, k2)};
}

PanelGeometry single_irs_panel(const ScenarioConfig& scenario, int total_elements) {
    if (total_elements < 1) throw std::invalid_argument("element count must be >= 1");
    return regrid(scenario.irs2, total_elements);
}

EffectiveChannel double_irs_channel_los(const ScenarioConfig& scenario, int k1, int k2) {
    const DoubleLinkLos link = make_double_link(scenario, k1, k2);
    return cascade_double(link.r, link.phi2, link.s_los, link.phi1, link.t);
}

EffectiveChannel single_irs_channel_los(const ScenarioConfig& scenario, int total_elements) {
    const PanelGeometry panel = single_irs_panel(scenario, total_elements);
    const ChannelVector t = los_vector(panel, scenario.bs_pos, scenario.prop);
    const ChannelVector r = los_vector(panel, scenario.user_pos, scenario.prop);
    return cascade_single(r, single_irs_phases(t, r), t);
}

SweepResult run_split_sweep(const ScenarioConfig& scenario, int total_elements, int step,
                            std::uint64_t seed) {
    require_valid(scenario);
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    if (total_elements < 2 * step)
        throw std::invalid_argument("total element count leaves no splits to sweep");

    SweepResult result;
    result.total_elements = total_elements;
    result.seed = seed;
    result.scenario_digest = scenario_digest(scenario);

    const double snr_single = received_snr_db(
        single_irs_channel_los(scenario, total_elements), scenario.tx_power_dbm,
        scenario.noise_power_dbm);
    const LinkDistances dists = link_distances(scenario);

    std::vector<int> splits;
    for (int k1 = step; k1 + step <= total_elements; k1 += step) splits.push_back(k1);
    result.rows.resize(splits.size());
    parallel_for(splits.size(), [&](std::size_t i) {
        const int k1 = splits[i];
        const int k2 = total_elements - k1;
        SweepRow row;
        row.k1 = k1;
        row.k2 = k2;
        row.snr_exact_db = received_snr_db(double_irs_channel_los(scenario, k1, k2),
                                           scenario.tx_power_dbm, scenario.noise_power_dbm);
        row.snr_closed_db =
            received_snr_db(double_gain_closed_form(k1, k2, dists, scenario.prop.ref_gain),
                            scenario.tx_power_dbm, scenario.noise_power_dbm);
        row.snr_single_db = snr_single;
        result.rows[i] = row;
    });
    return result;
}

std::vector<McResult> run_rician_study(const ScenarioConfig& scenario, int k1, int k2,
                                       const std::vector<double>& taus, int trials,
                                       std::uint64_t seed) {
    require_valid(scenario);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    for (const double tau : taus)
        if (std::isnan(tau) || tau < 0.0)
            throw std::invalid_argument("Rician factor must be >= 0 or infinite");

    const DoubleLinkLos link = make_double_link(scenario, k1, k2);
    const PanelGeometry bench = single_irs_panel(scenario, k1 + k2);
    const ChannelVector bench_t_los = los_vector(bench, scenario.bs_pos, scenario.prop);
    const ChannelVector bench_r = los_vector(bench, scenario.user_pos, scenario.prop);

    const auto to_db = [&](double gain) {
        return received_snr_db(gain, scenario.tx_power_dbm, scenario.noise_power_dbm);
    };

    std::vector<McResult> results;
    // Trial i of study block b (one block per (tau, case) pair, in emission
    // order) draws from stream_id = b * 2^32 + i, so every trial across the
    // whole study owns a distinct substream.
    std::uint64_t block = 0;
    for (const double tau : taus) {
        for (const bool is_double : {true, false}) {
            McResult mc;
            mc.tau = tau;
            mc.trials = trials;
            mc.case_label = is_double ? "double" : "single";
            std::vector<double> gains(static_cast<std::size_t>(trials));
            if (std::isinf(tau)) {
                // Pure LoS: every realization is the deterministic channel.
                const double gain =
                    is_double
                        ? cascade_double(link.r, link.phi2, link.s_los, link.phi1, link.t)
                              .power_gain
                        : cascade_single(bench_r, single_irs_phases(bench_t_los, bench_r),
                                         bench_t_los)
                              .power_gain;
                std::fill(gains.begin(), gains.end(), gain);
            } else if (is_double) {
                parallel_for(gains.size(), [&](std::size_t i) {
                    RngStream rng(seed, (block << 32) + i);
                    const ChannelMatrix s = rician_matrix(link.s_los, tau, rng);
                    gains[i] =
                        cascade_double(link.r, link.phi2, s, link.phi1, link.t).power_gain;
                });
            } else {
                parallel_for(gains.size(), [&](std::size_t i) {
                    RngStream rng(seed, (block << 32) + i);
                    const ChannelVector t = rician_vector(bench_t_los, tau, rng);
                    // The benchmark re-estimates its channels and re-aligns
                    // on every realization.
                    gains[i] = cascade_single(bench_r, single_irs_phases(t, bench_r), t)
                                   .power_gain;
                });
            }
            const auto [mean_gain, se_db] = mean_and_db_stderr(gains);
            mc.mean_snr_db = to_db(mean_gain);
            mc.std_err_db = std::isinf(tau) ? 0.0 : se_db;
            mc.per_trial_snr_db.reserve(gains.size());
            for (const double g : gains) mc.per_trial_snr_db.push_back(to_db(g));
            results.push_back(std::move(mc));
            ++block;
        }
    }
    return results;
}

DoublingDeltas run_doubling_deltas(const ScenarioConfig& scenario, int k_small,
                                   std::uint64_t /*seed*/) {
    require_valid(scenario);
    if (k_small < 2 || k_small % 2 != 0)
        throw std::invalid_argument("k_small must be even and >= 2");
    const int k_large = 2 * k_small;

    const auto snr = [&](const EffectiveChannel& h) {
        return received_snr_db(h, scenario.tx_power_dbm, scenario.noise_power_dbm);
    };
    const auto split_small = optimal_split(k_small);
    const auto split_large = optimal_split(k_large);

    DoublingDeltas deltas;
    deltas.k_small = k_small;
    deltas.snr_double_small_db =
        snr(double_irs_channel_los(scenario, split_small.first, split_small.second));
    deltas.snr_double_large_db =
        snr(double_irs_channel_los(scenario, split_large.first, split_large.second));
    deltas.snr_single_small_db = snr(single_irs_channel_los(scenario, k_small));
    deltas.snr_single_large_db = snr(single_irs_channel_los(scenario, k_large));
    deltas.delta_double_db = deltas.snr_double_large_db - deltas.snr_double_small_db;
    deltas.delta_single_db = deltas.snr_single_large_db - deltas.snr_single_small_db;
    return deltas;
}

CrossoverResult run_crossover_search(const ScenarioConfig& scenario, int k_min, int k_max,
                                     int step) {
    require_valid(scenario);
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    const int start = std::max(2, k_min + (k_min % 2));  // smallest even >= k_min
    const int stride = step + (step % 2);
    if (start > k_max) throw std::invalid_argument("empty search range");

    std::vector<int> ks;
    for (int k = start; k <= k_max; k += stride) ks.push_back(k);

    CrossoverResult result;
    result.scan.resize(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
        const int k = ks[i];
        const auto split = optimal_split(k);
        CrossoverPoint p;
        p.k = k;
        p.snr_double_db =
            received_snr_db(double_irs_channel_los(scenario, split.first, split.second),
                            scenario.tx_power_dbm, scenario.noise_power_dbm);
        p.snr_single_db = received_snr_db(single_irs_channel_los(scenario, k),
                                          scenario.tx_power_dbm, scenario.noise_power_dbm);
        result.scan[i] = p;
    });

    for (std::size_t i = 0; i < result.scan.size(); ++i) {
        const double gap = result.scan[i].snr_double_db - result.scan[i].snr_single_db;
        if (gap < 0.0) continue;
        if (i == 0) {
            result.status = CrossoverResult::Status::at_lower_boundary;
            result.k_star = result.scan[0].k;
        } else {
            const double prev_gap =
                result.scan[i - 1].snr_double_db - result.scan[i - 1].snr_single_db;
            const double fraction = -prev_gap / (gap - prev_gap);
            result.status = CrossoverResult::Status::found;
            result.k_star =
                result.scan[i - 1].k + fraction * (result.scan[i].k - result.scan[i - 1].k);
        }
        return result;
    }
    result.status = CrossoverResult::Status::not_found;
    return result;
}

}  // namespace dirsim
