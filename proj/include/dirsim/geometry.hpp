// SPDX-License-Identifier: Apache-2.0
//
// Rectangular reflecting-surface panels in 3D space: element positions,
// linear/grid index mapping, pairwise distances and boresight angles.

#ifndef DIRSIM_GEOMETRY_HPP
#define DIRSIM_GEOMETRY_HPP

#include <string>
#include <vector>

namespace dirsim {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool is_finite() const;
};

double dot(const Point3& a, const Point3& b);
double norm(const Point3& p);
double distance(const Point3& a, const Point3& b);
std::string to_string(const Point3& p);

// Element (ka, kb): 0-based offsets along the two base directions.
struct GridIndex {
    int ka = 0;
    int kb = 0;
};

// Angles (radians, in [0, pi]) between a reference direction and each
// base direction of a panel.
struct AnglePair {
    double omega_a = 0.0;
    double omega_b = 0.0;
};

// A rectangular panel of count_a x count_b elements. The anchor is element
// (0,0); dir_a and dir_b must be orthonormal (tolerance 1e-9, checked by
// validate_panel / require_valid, never re-orthogonalized). Adjacent
// elements are `spacing` meters apart along each direction.
struct PanelGeometry {
    Point3 anchor{};
    Point3 dir_a{};
    Point3 dir_b{};
    int count_a = 1;
    int count_b = 1;
    double spacing = 0.0;

    int size() const { return count_a * count_b; }
    bool contains(const GridIndex& g) const {
        return g.ka >= 0 && g.ka < count_a && g.kb >= 0 && g.kb < count_b;
    }
};

// Every violated panel invariant, empty when the panel is well formed.
std::vector<std::string> validate_panel(const PanelGeometry& panel);

// Throws std::invalid_argument listing all violations.
void require_valid(const PanelGeometry& panel);

// 1-based linear element index k = ka + 1 + kb * count_a, and its inverse.
// Out-of-bounds indices throw std::out_of_range.
int index_map(const PanelGeometry& panel, const GridIndex& g);
GridIndex inverse_index_map(const PanelGeometry& panel, int k);

// anchor + ka * spacing * dir_a + kb * spacing * dir_b
Point3 element_position(const PanelGeometry& panel, const GridIndex& g);

// All element positions ordered by the linear index (k = 1..size()).
std::vector<Point3> element_positions(const PanelGeometry& panel);

// Angles between `direction` and the panel's base directions. The result is
// invariant to positive scaling of `direction`; a zero-length direction
// throws std::domain_error.
AnglePair boresight_angles(const PanelGeometry& panel, const Point3& direction);

// Euclidean distance from a point to one element. Coincident point and
// element throw std::domain_error (path loss undefined at distance 0).
double point_to_element_distance(const Point3& point, const PanelGeometry& panel,
                                 const GridIndex& g);

}  // namespace dirsim

#endif  // DIRSIM_GEOMETRY_HPP
