// SPDX-License-Identifier: Apache-2.0
//
// dirsim command line: loads a scenario file, dispatches one experiment and
// writes its CSV plus a JSON run manifest.
//
// Exit codes: 0 success, 1 usage/parse error, 2 scenario or parameter
// validation error, 3 experiment failure, 4 output I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirsim/experiments.hpp"
#include "dirsim/io.hpp"
#include "dirsim/version.hpp"

namespace {

using dirsim::ScenarioConfig;

struct CommonOptions {
    std::string scenario_path;
    std::string out_path;  // empty: derive from DIRSIM_OUT_DIR and command name
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--scenario", common.scenario_path, "scenario file")->required();
    cmd->add_option("--out", common.out_path, "output CSV path");
    cmd->add_option("--seed", common.seed, "RNG seed")->capture_default_str();
}

std::filesystem::path resolve_out(const CommonOptions& common, const std::string& command) {
    if (!common.out_path.empty()) return common.out_path;
    const char* dir = std::getenv("DIRSIM_OUT_DIR");
    return std::filesystem::path(dir ? dir : ".") / (command + ".csv");
}

using Params = std::vector<std::pair<std::string, std::string>>;

void emit(const std::string& command, const ScenarioConfig& scenario,
          const CommonOptions& common, const Params& params, const std::string& csv) {
    const std::filesystem::path out = resolve_out(common, command);
    dirsim::write_text_atomic(out, csv);
    dirsim::write_text_atomic(
        out.string() + ".manifest.json",
        dirsim::manifest_json(command, scenario, common.seed, params, out.string()));
    std::cout << "wrote " << out.string() << "\n";
}

double parse_tau(const std::string& token) {
    if (token == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double tau = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad tau value: " + token);
    if (std::isnan(tau) || tau < 0.0)
        throw std::invalid_argument("tau must be >= 0 or 'inf': " + token);
    return tau;
}

int run_sweep(const CommonOptions& common, int k, int step) {
    const ScenarioConfig scenario = dirsim::load_scenario(common.scenario_path);
    const dirsim::SweepResult result =
        dirsim::run_split_sweep(scenario, k, step, common.seed);
    const auto best = std::max_element(
        result.rows.begin(), result.rows.end(),
        [](const auto& a, const auto& b) { return a.snr_exact_db < b.snr_exact_db; });
    std::cout << "sweep K=" << k << ": max exact SNR " << dirsim::format_db(best->snr_exact_db)
              << " dB at k1=" << best->k1 << "\n";
    emit("sweep", scenario, common,
         {{"k", std::to_string(k)}, {"step", std::to_string(step)}},
         dirsim::sweep_csv(result));
    return 0;
}

int run_rician(const CommonOptions& common, int k1, int k2,
               const std::vector<std::string>& tau_tokens, int trials) {
    std::vector<double> taus;
    std::string taus_joined;
    for (const auto& token : tau_tokens) {
        taus.push_back(parse_tau(token));
        taus_joined += (taus_joined.empty() ? "" : ",") + token;
    }
    const ScenarioConfig scenario = dirsim::load_scenario(common.scenario_path);
    const auto results = dirsim::run_rician_study(scenario, k1, k2, taus, trials, common.seed);
    for (const auto& mc : results)
        std::cout << "tau=" << dirsim::format_tau(mc.tau) << " " << mc.case_label
                  << ": mean SNR " << dirsim::format_db(mc.mean_snr_db) << " dB (se "
                  << dirsim::format_db(mc.std_err_db) << ")\n";
    emit("rician", scenario, common,
         {{"k1", std::to_string(k1)},
          {"k2", std::to_string(k2)},
          {"taus", taus_joined},
          {"trials", std::to_string(trials)}},
         dirsim::mc_csv(results));
    return 0;
}

int run_crossover(const CommonOptions& common, int k_min, int k_max, int step) {
    const ScenarioConfig scenario = dirsim::load_scenario(common.scenario_path);
    const auto result = dirsim::run_crossover_search(scenario, k_min, k_max, step);
    switch (result.status) {
        case dirsim::CrossoverResult::Status::found:
            std::cout << "crossover K* = " << dirsim::format_db(result.k_star) << "\n";
            break;
        case dirsim::CrossoverResult::Status::at_lower_boundary:
            std::cout << "crossover at or below range start, K* <= "
                      << dirsim::format_db(result.k_star) << " (boundary)\n";
            break;
        case dirsim::CrossoverResult::Status::not_found:
            std::cout << "no crossover in [" << k_min << ", " << k_max << "]\n";
            break;
    }
    emit("crossover", scenario, common,
         {{"k_min", std::to_string(k_min)},
          {"k_max", std::to_string(k_max)},
          {"step", std::to_string(step)},
          {"k_star", result.status == dirsim::CrossoverResult::Status::not_found
                         ? "not_found"
                         : dirsim::format_db(result.k_star)},
          {"status", result.status == dirsim::CrossoverResult::Status::found ? "found"
                     : result.status == dirsim::CrossoverResult::Status::at_lower_boundary
                         ? "at_lower_boundary"
                         : "not_found"}},
         dirsim::crossover_csv(result));
    return 0;
}

int run_doubling(const CommonOptions& common, int k_small) {
    const ScenarioConfig scenario = dirsim::load_scenario(common.scenario_path);
    const auto deltas = dirsim::run_doubling_deltas(scenario, k_small, common.seed);
    std::cout << "doubling K " << k_small << " -> " << 2 * k_small
              << ": delta_single = " << dirsim::format_db(deltas.delta_single_db)
              << " dB, delta_double = " << dirsim::format_db(deltas.delta_double_db)
              << " dB\n";
    emit("doubling", scenario, common, {{"k", std::to_string(k_small)}},
         dirsim::doubling_csv(deltas));
    return 0;
}

int run_validate(const std::string& scenario_path, int k) {
    const ScenarioConfig scenario = dirsim::load_scenario(scenario_path);
    const auto dists = dirsim::link_distances(scenario);
    const auto split = dirsim::optimal_split(k);
    const auto [_, irs2] = dirsim::build_panels(scenario, split.first, split.second);
    std::cout << "scenario OK (digest " << dirsim::scenario_digest(scenario) << ")\n"
              << "alpha = " << dirsim::format_db(scenario.prop.ref_gain) << " ("
              << dirsim::format_db(10.0 * std::log10(scenario.prop.ref_gain)) << " dB)\n"
              << "d_t = " << dirsim::format_db(dists.bs_to_irs1)
              << " m, d_S = " << dirsim::format_db(dists.irs_to_irs)
              << " m, d_r = " << dirsim::format_db(dists.irs2_to_user) << " m\n"
              << "rank_one_margin at K=" << k << " (K2=" << split.second << "): "
              << dirsim::format_db(
                     dirsim::rank_one_margin(irs2, dists.irs_to_irs, scenario.prop))
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-IRS link simulator"};
    app.set_version_flag("--version", dirsim::kVersion);
    app.require_subcommand(1);

    CommonOptions common;

    auto* sweep = app.add_subcommand("sweep", "received SNR versus the split of K elements");
    int sweep_k = 1600, sweep_step = 100;
    add_common(sweep, common);
    sweep->add_option("--k", sweep_k, "total element budget")->capture_default_str();
    sweep->add_option("--step", sweep_step, "split increment")->capture_default_str();

    auto* rician = app.add_subcommand("rician", "Rician fading Monte Carlo study");
    int ric_k1 = 800, ric_k2 = 800, ric_trials = 1000;
    std::vector<std::string> ric_taus{"inf", "3", "1"};
    add_common(rician, common);
    rician->add_option("--k1", ric_k1, "elements on the first panel")->capture_default_str();
    rician->add_option("--k2", ric_k2, "elements on the second panel")->capture_default_str();
    rician->add_option("--taus", ric_taus, "Rician factors ('inf' allowed)")->capture_default_str()
        ->delimiter(',');
    rician->add_option("--trials", ric_trials, "realizations per factor")->capture_default_str();

    auto* crossover = app.add_subcommand("crossover", "search the double-vs-single crossover");
    int cr_min = 600, cr_max = 1100, cr_step = 2;
    add_common(crossover, common);
    crossover->add_option("--k-min", cr_min, "range start")->capture_default_str();
    crossover->add_option("--k-max", cr_max, "range end")->capture_default_str();
    crossover->add_option("--step", cr_step, "scan stride (rounded to even)")->capture_default_str();

    auto* doubling = app.add_subcommand("doubling", "SNR deltas from doubling the budget");
    int dbl_k = 800;
    add_common(doubling, common);
    doubling->add_option("--k", dbl_k, "starting (small) element budget")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "check a scenario and report margins");
    std::string validate_scenario;
    int val_k = 1600;
    validate->add_option("--scenario", validate_scenario, "scenario file")->required();
    validate->add_option("--k", val_k, "budget for the rank-one margin report")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return run_sweep(common, sweep_k, sweep_step);
        if (rician->parsed()) return run_rician(common, ric_k1, ric_k2, ric_taus, ric_trials);
        if (crossover->parsed()) return run_crossover(common, cr_min, cr_max, cr_step);
        if (doubling->parsed()) return run_doubling(common, dbl_k);
        if (validate->parsed()) return run_validate(validate_scenario, val_k);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "experiment failed: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
