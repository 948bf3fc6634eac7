#pragma once

#include <cstdint>
#include <ostream>

#include "latpoly/checked.hpp"
#include "latpoly/point.hpp"

namespace latpoly {

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Point of Q^3.
struct RationalPoint3 {
    Rational x;
    Rational y;
    Rational z;

    RationalPoint3() = default;
    RationalPoint3(Rational a, Rational b, Rational c) : x(a), y(b), z(c) {}
    RationalPoint3(const Point3& p) : x(p.x), y(p.y), z(p.z) {}  // NOLINT

    bool operator==(const RationalPoint3&) const = default;
};

/// Writes q as X / d with X integral and d > 0 the least common denominator.
struct ScaledPoint {
    Point3 numer;
    std::int64_t denom;
};
ScaledPoint common_denominator(const RationalPoint3& q);

}  // namespace latpoly
