#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// Points (x, y, 0).
PointConfiguration embed_plane(std::span<const Point2> pts);
std::vector<Point2> drop_z(std::span<const Point3> pts);

/// Lattice points of conv(pts), lexicographic.
std::vector<Point2> polygon_lattice_points(std::span<const Point2> pts);

/// Vertices of conv(pts) in counterclockwise order, starting at the
/// lexicographically smallest; pts must span the plane.
std::vector<Point2> polygon_vertices_ccw(std::span<const Point2> pts);

struct PickCheck {
    std::int64_t volume;  // twice the Euclidean area
    std::int64_t boundary;
    std::int64_t interior;
    bool holds;  // volume == (boundary + interior) + interior - 2
};

PickCheck pick_check(std::span<const Point2> pts);

/// A lattice polygon class, stored by its lattice points.
struct PolygonClass {
    std::vector<Point2> points;
    std::string key;
};

/// Classes of lattice polygons with 3..max_size lattice points, grown from the
/// unimodular triangle by adding a point at lattice distance one from an
/// edge; candidate offsets along the edge range over [-reach, reach].
/// Result is indexed by size (entries below 3 are empty) and sorted by key.
std::vector<std::vector<PolygonClass>> grow_polygons(std::size_t max_size, std::int64_t reach = 4);

/// Sizes 3, 4 and 5.
std::vector<std::vector<PolygonClass>> enumerate_polygons_upto5();

/// Classes of polygons with exactly `size` lattice points among all subsets of
/// [0, box]^2, sorted by key.
std::vector<PolygonClass> polygons_in_box(std::size_t size, std::int64_t box = 4);

}  // namespace latpoly
