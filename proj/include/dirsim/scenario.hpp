// SPDX-License-Identifier: Apache-2.0
//
// Scenario description: transmitter/receiver positions, the two panel
// templates, propagation constants and link powers, plus the flat key/value
// scenario-file loader. Grammar (one pair per line, '#' starts a comment):
//
//   bs.position     = <x> <y> <z>        required
//   user.position   = <x> <y> <z>        required
//   irs1.anchor     = <x> <y> <z>        required      (same keys for irs2)
//   irs1.dir_a      = <x> <y> <z>        required, unit norm
//   irs1.dir_b      = <x> <y> <z>        required, unit norm, orthogonal
//   irs1.count_a    = <int>              optional, default 1
//   irs1.count_b    = <int>              optional, default 1
//   irs1.spacing    = <meters>           optional, default wavelength/2
//   prop.wavelength = <meters>           optional, default 0.06
//   prop.ref_gain   = <power ratio>      optional, default (wavelength/4pi)^2
//   power.tx_dbm    = <dBm>              optional, default 43
//   power.noise_dbm = <dBm>              optional, default -60
//
// Panel element counts in a scenario file are only a template; experiment
// drivers re-grid the panels for each requested element budget.

#ifndef DIRSIM_SCENARIO_HPP
#define DIRSIM_SCENARIO_HPP

#include <iosfwd>
#include <string>

#include "dirsim/channel.hpp"
#include "dirsim/geometry.hpp"

namespace dirsim {

struct ScenarioConfig {
    Point3 bs_pos{};
    Point3 user_pos{};
    PanelGeometry irs1{};
    PanelGeometry irs2{};
    PropagationParams prop{};
    double tx_power_dbm = 0.0;
    double noise_power_dbm = 0.0;
};

// Parse failures and invariant violations throw std::invalid_argument naming
// the offending key.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(std::istream& in);

// Throws std::invalid_argument if any invariant fails (invalid panels or
// propagation constants, BS/user coincident with an element, non-finite
// powers).
void require_valid(const ScenarioConfig& scenario);

// Canonical full-precision rendering; parses back to the same scenario.
std::string canonical_text(const ScenarioConfig& scenario);

// FNV-1a 64 over canonical_text, as 16 hex digits. Stable across runs and
// platforms; used to stamp result files with the scenario they came from.
std::string scenario_digest(const ScenarioConfig& scenario);

}  // namespace dirsim

#endif  // DIRSIM_SCENARIO_HPP
