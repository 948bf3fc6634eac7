#include "latpoly/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace latpoly {

std::int64_t determinant(const Matrix2& m) {
    return checked_sub(checked_mul(m(0, 0), m(1, 1)), checked_mul(m(0, 1), m(1, 0)));
}

namespace {

std::int64_t det3_checked(const Matrix3& m) {
    std::int64_t c0 = checked_sub(checked_mul(m(1, 1), m(2, 2)), checked_mul(m(1, 2), m(2, 1)));
    std::int64_t c1 = checked_sub(checked_mul(m(1, 0), m(2, 2)), checked_mul(m(1, 2), m(2, 0)));
    std::int64_t c2 = checked_sub(checked_mul(m(1, 0), m(2, 1)), checked_mul(m(1, 1), m(2, 0)));
    return checked_add(checked_sub(checked_mul(m(0, 0), c0), checked_mul(m(0, 1), c1)), checked_mul(m(0, 2), c2));
}

std::int64_t det3_wide(const Matrix3& m) {
    using boost::multiprecision::cpp_int;
    auto e = [&](int i, int j) { return cpp_int(m(i, j)); };
    cpp_int d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    if (d > cpp_int(std::numeric_limits<std::int64_t>::max()) || d < cpp_int(std::numeric_limits<std::int64_t>::min()))
        throw OverflowError("determinant exceeds int64");
    return static_cast<std::int64_t>(d);
}

}  // namespace

std::int64_t determinant(const Matrix3& m) {
    try {
        return det3_checked(m);
    } catch (const OverflowError&) {
        return det3_wide(m);
    }
}

Matrix2 adjugate(const Matrix2& m) {
    Matrix2 r;
    r(0, 0) = m(1, 1);
    r(0, 1) = checked_neg(m(0, 1));
    r(1, 0) = checked_neg(m(1, 0));
    r(1, 1) = m(0, 0);
    return r;
}

Matrix3 adjugate(const Matrix3& m) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i)
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            r(i, j) = checked_sub(checked_mul(m(r0, c0), m(r1, c1)), checked_mul(m(r0, c1), m(r1, c0)));
        }
    return r;
}

}  // namespace latpoly
