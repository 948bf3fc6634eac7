#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// Signed volumes of all ordered 4-subsets i<j<k<l, in lexicographic order.
struct VolumeVector {
    std::vector<std::int64_t> entries;
    bool operator==(const VolumeVector&) const = default;
};

/// Integer dependence of five points in stored order, sign normalized so
/// that the negative entries are the minority (first nonzero entry negative
/// on a tie).
struct FivePointVector {
    std::array<std::int64_t, 5> v{};
    bool operator==(const FivePointVector&) const = default;
    /// Entries sorted by absolute value, signs kept.
    std::array<std::int64_t, 5> sorted_abs() const;
};

/// Numbers of positive and negative entries, with pos >= neg.
struct Signature {
    int pos = 0;
    int neg = 0;
    bool operator==(const Signature&) const = default;
};

VolumeVector volume_vector(const PointConfiguration& cfg);

/// (w2345, -w1345, w1245, -w1235, w1234) before normalization.
std::array<std::int64_t, 5> raw_five_point_vector(const PointConfiguration& cfg);
FivePointVector five_point_vector(const PointConfiguration& cfg);
FivePointVector normalize_sign(std::array<std::int64_t, 5> v);
Signature signature(const FivePointVector& v);

/// All pairwise sums a+b (a <= b in the list) are distinct.
bool is_dps(const PointConfiguration& cfg);

std::ostream& operator<<(std::ostream& os, const FivePointVector& v);
std::ostream& operator<<(std::ostream& os, const Signature& s);

}  // namespace latpoly
