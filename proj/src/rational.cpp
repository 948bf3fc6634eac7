#include "latpoly/rational.hpp"

namespace latpoly {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    std::int64_t g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = gcd(a.den_, b.den_);
    std::int64_t n = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return {n, checked_mul(a.den_, b.den_ / g)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + Rational(checked_neg(b.num_), b.den_); }

Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = gcd(a.num_, b.den_);
    std::int64_t g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

ScaledPoint common_denominator(const RationalPoint3& q) {
    std::int64_t d = q.x.den();
    d = checked_mul(d / gcd(d, q.y.den()), q.y.den());
    d = checked_mul(d / gcd(d, q.z.den()), q.z.den());
    Point3 n{checked_mul(q.x.num(), d / q.x.den()), checked_mul(q.y.num(), d / q.y.den()),
             checked_mul(q.z.num(), d / q.z.den())};
    return {n, d};
}

}  // namespace latpoly
