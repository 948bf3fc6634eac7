#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>

#include "latpoly/checked.hpp"

namespace latpoly {

/// Integer point of Z^3, ordered lexicographically.
struct Point3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    auto operator<=>(const Point3&) const = default;

    std::int64_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    std::array<std::int64_t, 3> to_array() const { return {x, y, z}; }
    static Point3 from_array(const std::array<std::int64_t, 3>& a) { return {a[0], a[1], a[2]}; }
};

/// Integer point of Z^2.
struct Point2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    auto operator<=>(const Point2&) const = default;
    std::array<std::int64_t, 2> to_array() const { return {x, y}; }
};

inline Point3 operator+(const Point3& a, const Point3& b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z)};
}
inline Point3 operator-(const Point3& a, const Point3& b) {
    return {checked_sub(a.x, b.x), checked_sub(a.y, b.y), checked_sub(a.z, b.z)};
}
inline Point3 operator-(const Point3& a) { return {checked_neg(a.x), checked_neg(a.y), checked_neg(a.z)}; }
inline Point3 operator*(std::int64_t k, const Point3& a) {
    return {checked_mul(k, a.x), checked_mul(k, a.y), checked_mul(k, a.z)};
}

inline std::int64_t dot(const Point3& a, const Point3& b) {
    return checked_add(checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)), checked_mul(a.z, b.z));
}

inline Point3 cross(const Point3& a, const Point3& b) {
    return {checked_sub(checked_mul(a.y, b.z), checked_mul(a.z, b.y)),
            checked_sub(checked_mul(a.z, b.x), checked_mul(a.x, b.z)),
            checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x))};
}

inline bool is_zero(const Point3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

inline std::int64_t content(const Point3& a) { return gcd(gcd(a.x, a.y), a.z); }

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline Point3 primitive(const Point3& a) {
    std::int64_t g = content(a);
    if (g <= 1) return a;
    return {a.x / g, a.y / g, a.z / g};
}

inline Point2 operator-(const Point2& a, const Point2& b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
inline Point2 operator+(const Point2& a, const Point2& b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }

inline std::int64_t cross2(const Point2& a, const Point2& b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

inline std::ostream& operator<<(std::ostream& os, const Point3& p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}
inline std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << '(' << p.x << ',' << p.y << ')'; }

}  // namespace latpoly
