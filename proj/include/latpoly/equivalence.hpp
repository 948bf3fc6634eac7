#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// Map m with m(A[i]) = B[i] for all i, if unimodular and integral.
std::optional<UnimodularAffineMap> map_from_corresponding_points(const PointConfiguration& a,
                                                                 const PointConfiguration& b);

/// Unimodular map sending conv(A) onto conv(B), compared on lattice points.
std::optional<UnimodularAffineMap> z_equivalent(const PointConfiguration& a, const PointConfiguration& b);

/// Byte string equal for two configurations iff their hulls are
/// unimodularly equivalent.
std::string canonical_key(const PointConfiguration& cfg);

/// Same invariant for lattice polygons (given by all their lattice points).
std::string canonical_key_2d(const std::vector<Point2>& lattice_points);

std::string hex(const std::string& key);

}  // namespace latpoly
