#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace latpoly {

/// Raised when an exact integer computation leaves the int64 range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised on violated preconditions (wrong dimension, wrong size, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("int64 overflow in negation");
    return -a;
}

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor division, b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw DomainError("division by zero");
    if (b == -1) return checked_neg(a);
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw DomainError("division by zero");
    if (b == -1) return checked_neg(a);
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Representative of a mod m in [0, |m|).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    if (m == 0) throw DomainError("modulus zero");
    if (m < 0) m = checked_neg(m);
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

struct ExtendedGcd {
    std::int64_t g;
    std::int64_t x;
    std::int64_t y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g.
inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m (m >= 1); throws when gcd(a, m) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw DomainError("modulus must be positive");
    if (m == 1) return 0;
    auto e = extended_gcd(mod(a, m), m);
    if (e.g != 1) throw DomainError("not invertible modulo " + std::to_string(m));
    return mod(e.x, m);
}

}  // namespace latpoly
