// SPDX-License-Identifier: Apache-2.0

#include "dirsim/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dirsim {

namespace {

[[noreturn]] void fail_key(const std::string& key, const std::string& why) {
    throw std::invalid_argument("scenario key '" + key + "': " + why);
}

struct RawScenario {
    std::map<std::string, std::string> pairs;

    bool has(const std::string& key) const { return pairs.count(key) != 0; }

    double number(const std::string& key) const {
        std::istringstream is(pairs.at(key));
        double v = 0.0;
        if (!(is >> v)) fail_key(key, "expected a number");
        std::string rest;
        if (is >> rest) fail_key(key, "trailing content after number");
        return v;
    }

    int integer(const std::string& key) const {
        const double v = number(key);
        if (v != std::floor(v)) fail_key(key, "expected an integer");
        return static_cast<int>(v);
    }

    Point3 point(const std::string& key) const {
        std::istringstream is(pairs.at(key));
        Point3 p;
        if (!(is >> p.x >> p.y >> p.z)) fail_key(key, "expected three coordinates");
        std::string rest;
        if (is >> rest) fail_key(key, "trailing content after coordinates");
        if (!p.is_finite()) fail_key(key, "coordinates must be finite");
        return p;
    }
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

const char* const kKnownKeys[] = {
    "bs.position",  "user.position", "irs1.anchor",  "irs1.dir_a",  "irs1.dir_b",
    "irs1.count_a", "irs1.count_b",  "irs1.spacing", "irs2.anchor", "irs2.dir_a",
    "irs2.dir_b",   "irs2.count_a",  "irs2.count_b", "irs2.spacing",
    "prop.wavelength", "prop.ref_gain", "power.tx_dbm", "power.noise_dbm"};

bool known_key(const std::string& key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

PanelGeometry read_panel(const RawScenario& raw, const std::string& section,
                         double default_spacing) {
    for (const char* field : {".anchor", ".dir_a", ".dir_b"})
        if (!raw.has(section + field)) fail_key(section + field, "missing required key");
    PanelGeometry panel;
    panel.anchor = raw.point(section + ".anchor");
    panel.dir_a = raw.point(section + ".dir_a");
    panel.dir_b = raw.point(section + ".dir_b");
    panel.count_a = raw.has(section + ".count_a") ? raw.integer(section + ".count_a") : 1;
    panel.count_b = raw.has(section + ".count_b") ? raw.integer(section + ".count_b") : 1;
    panel.spacing =
        raw.has(section + ".spacing") ? raw.number(section + ".spacing") : default_spacing;
    const auto violations = validate_panel(panel);
    if (!violations.empty()) {
        // Violation strings start with the offending field name.
        std::string field = violations.front().substr(0, violations.front().find(' '));
        if (field == "directions") field = "dir_b";
        fail_key(section + "." + field, violations.front());
    }
    return panel;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const Point3& p) { return fmt(p.x) + " " + fmt(p.y) + " " + fmt(p.z); }

}  // namespace

ScenarioConfig parse_scenario(std::istream& in) {
    RawScenario raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("scenario line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_key(key)) fail_key(key, "unknown key");
        if (value.empty()) fail_key(key, "empty value");
        if (!raw.pairs.emplace(key, value).second) fail_key(key, "duplicate key");
    }

    for (const char* required : {"bs.position", "user.position"})
        if (!raw.has(required)) fail_key(required, "missing required key");

    ScenarioConfig sc;
    sc.bs_pos = raw.point("bs.position");
    sc.user_pos = raw.point("user.position");

    const double wavelength = raw.has("prop.wavelength") ? raw.number("prop.wavelength") : 0.06;
    if (!(wavelength > 0.0)) fail_key("prop.wavelength", "must be positive");
    sc.prop = PropagationParams::free_space(wavelength);
    if (raw.has("prop.ref_gain")) {
        sc.prop.ref_gain = raw.number("prop.ref_gain");
        if (!(sc.prop.ref_gain > 0.0)) fail_key("prop.ref_gain", "must be positive");
    }

    sc.irs1 = read_panel(raw, "irs1", wavelength / 2.0);
    sc.irs2 = read_panel(raw, "irs2", wavelength / 2.0);

    sc.tx_power_dbm = raw.has("power.tx_dbm") ? raw.number("power.tx_dbm") : 43.0;
    if (!std::isfinite(sc.tx_power_dbm)) fail_key("power.tx_dbm", "must be finite");
    sc.noise_power_dbm = raw.has("power.noise_dbm") ? raw.number("power.noise_dbm") : -60.0;
    if (!std::isfinite(sc.noise_power_dbm)) fail_key("power.noise_dbm", "must be finite");

    require_valid(sc);
    return sc;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    return parse_scenario(in);
}

void require_valid(const ScenarioConfig& scenario) {
    const auto check_panel = [](const char* name, const PanelGeometry& p) {
        const auto violations = validate_panel(p);
        if (!violations.empty())
            throw std::invalid_argument(std::string("invalid ") + name + " panel: " +
                                        violations.front());
    };
    check_panel("irs1", scenario.irs1);
    check_panel("irs2", scenario.irs2);
    require_valid(scenario.prop);
    if (!scenario.bs_pos.is_finite() || !scenario.user_pos.is_finite())
        throw std::invalid_argument("positions must be finite");
    if (!std::isfinite(scenario.tx_power_dbm) || !std::isfinite(scenario.noise_power_dbm))
        throw std::invalid_argument("powers must be finite");
    // Coincidence of the link endpoints with any template element leaves the
    // path loss undefined.
    for (const auto& pos : element_positions(scenario.irs1))
        if (!(distance(pos, scenario.bs_pos) > 0.0))
            throw std::invalid_argument("bs.position coincides with an irs1 element");
    for (const auto& pos : element_positions(scenario.irs2))
        if (!(distance(pos, scenario.user_pos) > 0.0))
            throw std::invalid_argument("user.position coincides with an irs2 element");
}

std::string canonical_text(const ScenarioConfig& s) {
    std::ostringstream os;
    os << "bs.position = " << fmt(s.bs_pos) << "\n"
       << "user.position = " << fmt(s.user_pos) << "\n";
    const auto panel = [&os](const char* name, const PanelGeometry& p) {
        os << name << ".anchor = " << fmt(p.anchor) << "\n"
           << name << ".dir_a = " << fmt(p.dir_a) << "\n"
           << name << ".dir_b = " << fmt(p.dir_b) << "\n"
           << name << ".count_a = " << p.count_a << "\n"
           << name << ".count_b = " << p.count_b << "\n"
           << name << ".spacing = " << fmt(p.spacing) << "\n";
    };
    panel("irs1", s.irs1);
    panel("irs2", s.irs2);
    os << "prop.wavelength = " << fmt(s.prop.wavelength) << "\n"
       << "prop.ref_gain = " << fmt(s.prop.ref_gain) << "\n"
       << "power.tx_dbm = " << fmt(s.tx_power_dbm) << "\n"
       << "power.noise_dbm = " << fmt(s.noise_power_dbm) << "\n";
    return os.str();
}

std::string scenario_digest(const ScenarioConfig& scenario) {
    const std::string text = canonical_text(scenario);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace dirsim
