// SPDX-License-Identifier: Apache-2.0
//
// Result serialization. CSV bytes are deterministic for fixed inputs: dB
// values use 6 significant digits ("%.6g"), raw complex parts 9. Files are
// written whole and renamed into place so readers never observe partial
// output.

#ifndef DIRSIM_IO_HPP
#define DIRSIM_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dirsim/beamforming.hpp"
#include "dirsim/experiments.hpp"

namespace dirsim {

std::string format_db(double value);  // "%.6g"; -inf renders as "-inf"
std::string format_tau(double tau);   // "%.6g"; +inf renders as "inf"

// header k1,k2,snr_exact_db,snr_closed_db,snr_single_db
std::string sweep_csv(const SweepResult& result);

// header tau,trials,mean_snr_db,std_err_db,case
std::string mc_csv(const std::vector<McResult>& results);

// header k,snr_double_db,snr_single_db
std::string crossover_csv(const CrossoverResult& result);

// header case,k_small,k_large,snr_small_db,snr_large_db,delta_db
std::string doubling_csv(const DoublingDeltas& deltas);

// Debug exports; indices are the 1-based linear element indices.
std::string channel_matrix_csv(const ChannelMatrix& m);   // k2,k1,re,im
std::string reflection_csv(const ReflectionConfig& cfg);  // k,re,im

// Run manifest: tool version, command, seed, command parameters, the
// scenario digest and its full canonical text -- enough to re-run the
// identical experiment.
std::string manifest_json(const std::string& command, const ScenarioConfig& scenario,
                          std::uint64_t seed,
                          const std::vector<std::pair<std::string, std::string>>& parameters,
                          const std::string& output_path);

// Write-then-rename; throws std::runtime_error on I/O failure.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace dirsim

#endif  // DIRSIM_IO_HPP
