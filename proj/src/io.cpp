// SPDX-License-Identifier: Apache-2.0

#include "dirsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dirsim/version.hpp"

namespace dirsim {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string format_part(double v) { return fmt("%.9g", v); }

}  // namespace

std::string format_db(double value) {
    if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
    return fmt("%.6g", value);
}

std::string format_tau(double tau) {
    if (std::isinf(tau)) return "inf";
    return fmt("%.6g", tau);
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "k1,k2,snr_exact_db,snr_closed_db,snr_single_db\n";
    for (const SweepRow& row : result.rows)
        os << row.k1 << ',' << row.k2 << ',' << format_db(row.snr_exact_db) << ','
           << format_db(row.snr_closed_db) << ',' << format_db(row.snr_single_db) << '\n';
    return os.str();
}

std::string mc_csv(const std::vector<McResult>& results) {
    std::ostringstream os;
    os << "tau,trials,mean_snr_db,std_err_db,case\n";
    for (const McResult& mc : results)
        os << format_tau(mc.tau) << ',' << mc.trials << ',' << format_db(mc.mean_snr_db)
           << ',' << format_db(mc.std_err_db) << ',' << mc.case_label << '\n';
    return os.str();
}

std::string crossover_csv(const CrossoverResult& result) {
    std::ostringstream os;
    os << "k,snr_double_db,snr_single_db\n";
    for (const CrossoverPoint& p : result.scan)
        os << p.k << ',' << format_db(p.snr_double_db) << ',' << format_db(p.snr_single_db)
           << '\n';
    return os.str();
}

std::string doubling_csv(const DoublingDeltas& deltas) {
    std::ostringstream os;
    os << "case,k_small,k_large,snr_small_db,snr_large_db,delta_db\n";
    os << "single," << deltas.k_small << ',' << 2 * deltas.k_small << ','
       << format_db(deltas.snr_single_small_db) << ',' << format_db(deltas.snr_single_large_db)
       << ',' << format_db(deltas.delta_single_db) << '\n';
    os << "double," << deltas.k_small << ',' << 2 * deltas.k_small << ','
       << format_db(deltas.snr_double_small_db) << ',' << format_db(deltas.snr_double_large_db)
       << ',' << format_db(deltas.delta_double_db) << '\n';
    return os.str();
}

std::string channel_matrix_csv(const ChannelMatrix& m) {
    std::ostringstream os;
    os << "k2,k1,re,im\n";
    for (Eigen::Index k1 = 0; k1 < m.cols(); ++k1)
        for (Eigen::Index k2 = 0; k2 < m.rows(); ++k2)
            os << k2 + 1 << ',' << k1 + 1 << ',' << format_part(m(k2, k1).real()) << ','
               << format_part(m(k2, k1).imag()) << '\n';
    return os.str();
}

std::string reflection_csv(const ReflectionConfig& cfg) {
    std::ostringstream os;
    os << "k,re,im\n";
    const auto& c = cfg.coefficients();
    for (Eigen::Index k = 0; k < c.size(); ++k)
        os << k + 1 << ',' << format_part(c[k].real()) << ',' << format_part(c[k].imag())
           << '\n';
    return os.str();
}

std::string manifest_json(const std::string& command, const ScenarioConfig& scenario,
                          std::uint64_t seed,
                          const std::vector<std::pair<std::string, std::string>>& parameters,
                          const std::string& output_path) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : parameters) params[key] = value;
    const nlohmann::json doc = {{"tool", "dirsim"},
                                {"version", kVersion},
                                {"command", command},
                                {"seed", seed},
                                {"parameters", params},
                                {"scenario_digest", scenario_digest(scenario)},
                                {"scenario_text", canonical_text(scenario)},
                                {"output", output_path}};
    return doc.dump(2) + "\n";
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace dirsim
