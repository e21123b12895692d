// SPDX-License-Identifier: Apache-2.0

#include "dirsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirsim {

namespace {

constexpr double kOrthoTol = 1e-9;

void require_in_bounds(const PanelGeometry& panel, const GridIndex& g) {
    if (!panel.contains(g)) {
        std::ostringstream msg;
        msg << "grid index (" << g.ka << "," << g.kb << ") out of bounds for "
            << panel.count_a << "x" << panel.count_b << " panel";
        throw std::out_of_range(msg.str());
    }
}

}  // namespace

bool Point3::is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

double distance(const Point3& a, const Point3& b) { return norm(a - b); }

std::string to_string(const Point3& p) {
    std::ostringstream os;
    os << "[" << p.x << ", " << p.y << ", " << p.z << "]";
    return os.str();
}

std::vector<std::string> validate_panel(const PanelGeometry& panel) {
    std::vector<std::string> violations;
    if (!panel.anchor.is_finite()) violations.push_back("anchor not finite");
    if (!panel.dir_a.is_finite()) violations.push_back("dir_a not finite");
    if (!panel.dir_b.is_finite()) violations.push_back("dir_b not finite");
    if (panel.dir_a.is_finite() && std::abs(norm(panel.dir_a) - 1.0) > kOrthoTol)
        violations.push_back("dir_a not unit norm");
    if (panel.dir_b.is_finite() && std::abs(norm(panel.dir_b) - 1.0) > kOrthoTol)
        violations.push_back("dir_b not unit norm");
    if (panel.dir_a.is_finite() && panel.dir_b.is_finite() &&
        std::abs(dot(panel.dir_a, panel.dir_b)) > kOrthoTol)
        violations.push_back("directions not orthogonal");
    if (panel.count_a < 1) violations.push_back("count_a not positive");
    if (panel.count_b < 1) violations.push_back("count_b not positive");
    if (!(panel.spacing > 0.0) || !std::isfinite(panel.spacing))
        violations.push_back("spacing not positive");
    return violations;
}

void require_valid(const PanelGeometry& panel) {
    const auto violations = validate_panel(panel);
    if (violations.empty()) return;
    std::string msg = "invalid panel:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
}

int index_map(const PanelGeometry& panel, const GridIndex& g) {
    require_in_bounds(panel, g);
    return g.ka + 1 + g.kb * panel.count_a;
}

GridIndex inverse_index_map(const PanelGeometry& panel, int k) {
    if (k < 1 || k > panel.size()) {
        std::ostringstream msg;
        msg << "linear index " << k << " outside [1," << panel.size() << "]";
        throw std::out_of_range(msg.str());
    }
    return GridIndex{(k - 1) % panel.count_a, (k - 1) / panel.count_a};
}

Point3 element_position(const PanelGeometry& panel, const GridIndex& g) {
    require_in_bounds(panel, g);
    return panel.anchor + panel.dir_a * (g.ka * panel.spacing) +
           panel.dir_b * (g.kb * panel.spacing);
}

std::vector<Point3> element_positions(const PanelGeometry& panel) {
    std::vector<Point3> positions;
    positions.reserve(static_cast<std::size_t>(panel.size()));
    for (int kb = 0; kb < panel.count_b; ++kb)
        for (int ka = 0; ka < panel.count_a; ++ka)
            positions.push_back(element_position(panel, GridIndex{ka, kb}));
    return positions;
}

AnglePair boresight_angles(const PanelGeometry& panel, const Point3& direction) {
    const double len = norm(direction);
    if (!(len > 0.0) || !direction.is_finite())
        throw std::domain_error("boresight_angles: zero-length direction");
    const auto angle = [&](const Point3& base) {
        const double c = std::clamp(dot(direction, base) / len, -1.0, 1.0);
        return std::acos(c);
    };
    return AnglePair{angle(panel.dir_a), angle(panel.dir_b)};
}

double point_to_element_distance(const Point3& point, const PanelGeometry& panel,
                                 const GridIndex& g) {
    const double d = distance(point, element_position(panel, g));
    if (!(d > 0.0))
        throw std::domain_error("point coincides with panel element, path loss undefined");
    return d;
}

}  // namespace dirsim
