// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "dirsim/scenario.hpp"

using namespace dirsim;

namespace {

const char* kMinimal =
    "bs.position   = 0.87 0.5 0\n"
    "user.position = 13 92.5 0\n"
    "irs1.anchor = 0 0 0\n"
    "irs1.dir_a  = 0 0 1\n"
    "irs1.dir_b  = 0.8660254037844386 -0.5 0\n"
    "irs2.anchor = 0 100 0\n"
    "irs2.dir_a  = 0.8660254037844386 0.5 0\n"
    "irs2.dir_b  = 0 0 1\n";

ScenarioConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

void check_parse_error(const std::string& text, const std::string& needle) {
    try {
        parse_text(text);
        FAIL("expected parse failure mentioning '" << needle << "'");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("minimal scenario gets the documented defaults") {
    const ScenarioConfig sc = parse_text(kMinimal);
    CHECK(sc.prop.wavelength == doctest::Approx(0.06));
    CHECK(10.0 * std::log10(sc.prop.ref_gain) == doctest::Approx(-46.4212).epsilon(1e-5));
    CHECK(sc.irs1.spacing == doctest::Approx(0.03));
    CHECK(sc.irs2.spacing == doctest::Approx(0.03));
    CHECK(sc.irs1.count_a == 1);
    CHECK(sc.irs2.count_b == 1);
    CHECK(sc.tx_power_dbm == doctest::Approx(43.0));
    CHECK(sc.noise_power_dbm == doctest::Approx(-60.0));
    CHECK(sc.bs_pos.x == doctest::Approx(0.87));
    CHECK(sc.user_pos.y == doctest::Approx(92.5));
}

TEST_CASE("explicit keys override defaults; comments and blanks are ignored") {
    const ScenarioConfig sc = parse_text(std::string(kMinimal) +
                                         "\n# carrier override\n"
                                         "prop.wavelength = 0.12\n"
                                         "irs1.spacing = 0.05   # not half-wavelength\n"
                                         "irs1.count_a = 4\n"
                                         "irs1.count_b = 2\n"
                                         "power.tx_dbm = 30\n");
    CHECK(sc.prop.wavelength == doctest::Approx(0.12));
    // ref_gain default tracks the overridden wavelength.
    const double expect = std::pow(0.12 / (4 * 3.14159265358979323846), 2);
    CHECK(sc.prop.ref_gain == doctest::Approx(expect).epsilon(1e-12));
    CHECK(sc.irs1.spacing == doctest::Approx(0.05));
    CHECK(sc.irs2.spacing == doctest::Approx(0.06));
    CHECK(sc.irs1.count_a == 4);
    CHECK(sc.irs1.count_b == 2);
    CHECK(sc.tx_power_dbm == doctest::Approx(30.0));
}

TEST_CASE("parse failures name the offending key") {
    check_parse_error(std::string(kMinimal) + "irs1.spacing = -0.5\n", "irs1.spacing");
    check_parse_error(std::string(kMinimal) + "prop.wavelength = 0\n", "prop.wavelength");
    check_parse_error(std::string(kMinimal) + "mystery.key = 3\n", "mystery.key");
    check_parse_error(std::string(kMinimal) + "bs.position = 1 2 3\n", "bs.position");
    check_parse_error(std::string(kMinimal) + "irs1.count_a = 2.5\n", "irs1.count_a");
    check_parse_error(std::string(kMinimal) + "power.tx_dbm = watts\n", "power.tx_dbm");
    check_parse_error("bs.position = 1 2\nuser.position = 1 2 3\n", "bs.position");
    check_parse_error("user.position = 1 2 3\n", "bs.position");

    // Non-unit and non-orthogonal directions are rejected at load.
    std::string skewed(kMinimal);
    const auto pos = skewed.find("irs1.dir_b  = 0.8660254037844386 -0.5 0");
    skewed.replace(pos, std::string("irs1.dir_b  = 0.8660254037844386 -0.5 0").size(),
                   "irs1.dir_b  = 0 0 1");
    check_parse_error(skewed, "irs1");
}

TEST_CASE("coincident endpoints are rejected") {
    std::string text(kMinimal);
    const std::string from = "bs.position   = 0.87 0.5 0";
    text.replace(text.find(from), from.size(), "bs.position   = 0 0 0");
    check_parse_error(text, "bs.position");
}

TEST_CASE("missing line structure is reported with the line number") {
    check_parse_error(std::string(kMinimal) + "just some words\n", "line 9");
}

TEST_CASE("canonical text round-trips and digests are stable") {
    const ScenarioConfig sc = parse_text(std::string(kMinimal) + "irs1.count_a = 3\n");
    const ScenarioConfig back = parse_text(canonical_text(sc));
    CHECK(canonical_text(back) == canonical_text(sc));
    CHECK(scenario_digest(back) == scenario_digest(sc));
    CHECK(scenario_digest(sc).size() == 16);

    ScenarioConfig other = sc;
    other.tx_power_dbm = 44.0;
    CHECK(scenario_digest(other) != scenario_digest(sc));
}

TEST_CASE("shipped reference scenario carries the published deployment") {
    const char* path = std::getenv("DIRSIM_SCENARIO");
    REQUIRE_MESSAGE(path != nullptr, "DIRSIM_SCENARIO must point at the shipped scenario");
    const ScenarioConfig sc = load_scenario(path);
    CHECK(sc.bs_pos.x == doctest::Approx(0.87));
    CHECK(sc.bs_pos.y == doctest::Approx(0.5));
    CHECK(sc.user_pos.x == doctest::Approx(13.0));
    CHECK(sc.user_pos.y == doctest::Approx(92.5));
    CHECK(sc.irs1.anchor.y == doctest::Approx(0.0));
    CHECK(sc.irs2.anchor.y == doctest::Approx(100.0));
    CHECK(sc.prop.wavelength == doctest::Approx(0.06));
    CHECK(sc.irs1.spacing == doctest::Approx(0.03));
    CHECK(sc.tx_power_dbm == doctest::Approx(43.0));
    CHECK(sc.noise_power_dbm == doctest::Approx(-60.0));
    CHECK(load_scenario(path).bs_pos.x == sc.bs_pos.x);
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.scn"), std::invalid_argument);
}
