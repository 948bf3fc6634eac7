#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "latpoly/checked.hpp"
#include "latpoly/matrix.hpp"
#include "latpoly/point.hpp"
#include "latpoly/rational.hpp"

namespace latpoly {

/// Dimension of the affine hull; -1 for the empty list.
int affine_dimension(std::span<const Point3> pts);

/// Ordered list of distinct lattice points in Z^3.
class PointConfiguration {
public:
    PointConfiguration() = default;
    explicit PointConfiguration(std::vector<Point3> pts);
    PointConfiguration(std::initializer_list<Point3> pts) : PointConfiguration(std::vector<Point3>(pts)) {}

    const std::vector<Point3>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Point3& operator[](std::size_t i) const { return pts_[i]; }
    int dim() const { return dim_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    /// Copy with the points in lexicographic order.
    PointConfiguration sorted() const;

    bool operator==(const PointConfiguration& o) const { return pts_ == o.pts_; }

private:
    std::vector<Point3> pts_;
    int dim_ = -1;
};

std::ostream& operator<<(std::ostream& os, const PointConfiguration& c);

/// x -> linear * x + translation with det(linear) = +-1.
class UnimodularAffineMap {
public:
    UnimodularAffineMap() : linear_(Matrix3::identity()) {}
    UnimodularAffineMap(const Matrix3& linear, const Point3& translation);

    static UnimodularAffineMap identity() { return {}; }
    static UnimodularAffineMap translation_by(const Point3& t) { return {Matrix3::identity(), t}; }

    const Matrix3& linear() const { return linear_; }
    const Point3& translation() const { return translation_; }
    std::int64_t det() const { return det_; }

    Point3 operator()(const Point3& p) const { return linear_ * p + translation_; }
    PointConfiguration operator()(const PointConfiguration& c) const;

    /// (this o other)(x) = this(other(x)).
    UnimodularAffineMap compose(const UnimodularAffineMap& other) const;
    UnimodularAffineMap inverse() const;

    bool operator==(const UnimodularAffineMap& o) const {
        return linear_ == o.linear_ && translation_ == o.translation_;
    }

private:
    Matrix3 linear_;
    Point3 translation_{};
    std::int64_t det_ = 1;
};

std::ostream& operator<<(std::ostream& os, const UnimodularAffineMap& m);

/// x -> a*x + b*y + c*z + k.
struct IntegerFunctional {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t k = 0;

    std::int64_t operator()(const Point3& p) const { return checked_add(dot(linear(), p), k); }
    Point3 linear() const { return {a, b, c}; }
    bool is_primitive() const { return content(linear()) == 1; }
    bool operator==(const IntegerFunctional&) const = default;
};

std::ostream& operator<<(std::ostream& os, const IntegerFunctional& f);

/// Inequality normal . x <= offset, or equality when used as such.
struct HalfSpace {
    Point3 normal;
    std::int64_t offset;
    auto operator<=>(const HalfSpace&) const = default;
};

/// Exact H-description of conv(points): equalities cut out the affine hull,
/// inequalities are the facets relative to it.
class Hull {
public:
    explicit Hull(std::span<const Point3> pts);

    int dim() const { return dim_; }
    bool contains(const Point3& p) const;
    bool contains(const RationalPoint3& q) const;
    /// Lattice points of the polytope in lexicographic order.
    std::vector<Point3> lattice_points() const;
    /// Number of lattice points, or cap + 1 once more than cap are found.
    std::size_t count_lattice_points(std::size_t cap) const;

    const std::vector<HalfSpace>& equalities() const { return equalities_; }
    const std::vector<HalfSpace>& facets() const { return inequalities_; }
    Point3 box_min() const { return lo_; }
    Point3 box_max() const { return hi_; }

private:
    bool contains_scaled(const Point3& numer, std::int64_t denom) const;

    int dim_ = -1;
    std::vector<HalfSpace> equalities_;
    std::vector<HalfSpace> inequalities_;
    Point3 lo_{};
    Point3 hi_{};
};

bool hull_contains(const PointConfiguration& cfg, const RationalPoint3& q);
std::vector<Point3> lattice_points_in_hull(const PointConfiguration& cfg);
std::vector<Point3> lattice_points_in_hull(std::span<const Point3> pts);

/// Points of cfg that are not in the hull of the others, in stored order.
std::vector<Point3> vertices(const PointConfiguration& cfg);

/// Signed det(p2-p1, p3-p1, p4-p1).
std::int64_t signed_volume(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4);
/// Normalized volume |det(p2-p1, p3-p1, p4-p1)|.
std::int64_t tetra_volume(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4);
/// Normalized volume (6 times Euclidean) of conv(cfg); 0 below dimension 3.
std::int64_t normalized_volume(const PointConfiguration& cfg);

/// Forced affine map sending src[i] to dst[i] for an affinely independent
/// src, if it is integral and unimodular.
std::optional<UnimodularAffineMap> forced_map(std::span<const Point3, 4> src, std::span<const Point3, 4> dst);

/// Unimodular matrix whose first row is the primitive vector v.
Matrix3 complete_row_to_basis(const Point3& v);

}  // namespace latpoly
