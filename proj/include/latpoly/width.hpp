#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

struct WidthResult {
    std::int64_t width = 0;
    /// Primitive, first nonzero coefficient positive, min over cfg equal to 0.
    IntegerFunctional witness;
    /// Every functional with spread <= width has coefficients in the dual box
    /// of this radius, and that box was enumerated completely.
    std::int64_t certificate_bound = 0;
};

/// Lattice width of conv(cfg) within its affine hull (dimension >= 1).
WidthResult lattice_width(const PointConfiguration& cfg);

/// max f - min f over cfg; f must be non-constant on the affine hull.
std::int64_t width_of(const PointConfiguration& cfg, const IntegerFunctional& f);

struct WidthOneSplit {
    IntegerFunctional functional;
    std::vector<Point3> lower;  // f == 0
    std::vector<Point3> upper;  // f == 1
};

std::optional<WidthOneSplit> width_one_split(const PointConfiguration& cfg);

}  // namespace latpoly
