#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "latpoly/lattice.hpp"

namespace testsupport {

using namespace latpoly;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20161016);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Product of a few elementary shears, a coordinate permutation and sign
/// flips, plus a translation; entries stay small.
inline UnimodularAffineMap random_unimodular(int shears = 3, std::int64_t coeff = 2, std::int64_t shift = 5) {
    Matrix3 m = Matrix3::identity();
    for (int s = 0; s < shears; ++s) {
        Matrix3 e = Matrix3::identity();
        std::size_t i = static_cast<std::size_t>(uniform(0, 2));
        std::size_t j = static_cast<std::size_t>(uniform(0, 1));
        if (j >= i) ++j;
        e.a[i][j] = uniform(-coeff, coeff);
        m = e * m;
    }
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng());
    Matrix3 p{};
    for (std::size_t i = 0; i < 3; ++i) p.a[i][perm[i]] = uniform(0, 1) ? 1 : -1;
    m = p * m;
    return UnimodularAffineMap(m, {uniform(-shift, shift), uniform(-shift, shift), uniform(-shift, shift)});
}

/// n distinct random points in [lo, hi]^3.
inline std::vector<Point3> random_points(std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<Point3> pts;
    while (pts.size() < n) {
        Point3 p{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return pts;
}

inline std::vector<Point3> random_full_dim(std::size_t n, std::int64_t lo, std::int64_t hi) {
    for (;;) {
        auto pts = random_points(n, lo, hi);
        if (affine_dimension(pts) == 3) return pts;
    }
}

inline std::vector<Point3> as_set(std::vector<Point3> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<Point3> image(const UnimodularAffineMap& m, const std::vector<Point3>& pts) {
    std::vector<Point3> out;
    for (const auto& p : pts) out.push_back(m(p));
    return out;
}

}  // namespace testsupport
