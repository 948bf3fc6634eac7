#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "latpoly/checked.hpp"
#include "latpoly/point.hpp"

namespace latpoly {

template <std::size_t N>
using IntVector = std::array<std::int64_t, N>;

/// Square integer matrix, row major.
template <std::size_t N>
struct IntMatrix {
    std::array<std::array<std::int64_t, N>, N> a{};

    std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity() {
        IntMatrix m;
        for (std::size_t i = 0; i < N; ++i) m.a[i][i] = 1;
        return m;
    }

    static IntMatrix from_columns(const std::array<IntVector<N>, N>& cols) {
        IntMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m.a[i][j] = cols[j][i];
        return m;
    }

    IntVector<N> row(std::size_t i) const { return a[i]; }
    IntVector<N> column(std::size_t j) const {
        IntVector<N> c{};
        for (std::size_t i = 0; i < N; ++i) c[i] = a[i][j];
        return c;
    }
};

using Matrix3 = IntMatrix<3>;
using Matrix2 = IntMatrix<2>;

template <std::size_t N>
IntMatrix<N> operator*(const IntMatrix<N>& x, const IntMatrix<N>& y) {
    IntMatrix<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < N; ++k) s = checked_add(s, checked_mul(x.a[i][k], y.a[k][j]));
            r.a[i][j] = s;
        }
    return r;
}

template <std::size_t N>
IntVector<N> operator*(const IntMatrix<N>& m, const IntVector<N>& v) {
    IntVector<N> r{};
    for (std::size_t i = 0; i < N; ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < N; ++k) s = checked_add(s, checked_mul(m.a[i][k], v[k]));
        r[i] = s;
    }
    return r;
}

inline Point3 operator*(const Matrix3& m, const Point3& p) { return Point3::from_array(m * p.to_array()); }

template <std::size_t N>
IntMatrix<N> transpose(const IntMatrix<N>& m) {
    IntMatrix<N> t;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) t.a[i][j] = m.a[j][i];
    return t;
}

std::int64_t determinant(const Matrix2& m);
/// Exact; falls back to arbitrary precision when an int64 intermediate overflows.
std::int64_t determinant(const Matrix3& m);

/// adj(m) with m * adj(m) = det(m) * I.
Matrix2 adjugate(const Matrix2& m);
Matrix3 adjugate(const Matrix3& m);

inline std::int64_t det3(const Point3& a, const Point3& b, const Point3& c) {
    return determinant(Matrix3::from_columns({a.to_array(), b.to_array(), c.to_array()}));
}

/// Inverse of a matrix with determinant +1 or -1; throws otherwise.
template <std::size_t N>
IntMatrix<N> unimodular_inverse(const IntMatrix<N>& m) {
    std::int64_t d = determinant(m);
    if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
    IntMatrix<N> adj = adjugate(m);
    if (d == -1)
        for (auto& r : adj.a)
            for (auto& e : r) e = checked_neg(e);
    return adj;
}

/// Row-style Hermite normal form: u * m = h with u unimodular, h upper
/// triangular with positive diagonal and 0 <= h(r, c) < h(c, c) for r < c.
/// Requires m nonsingular; h is then unique under left GL_N(Z) action.
template <std::size_t N>
struct HermiteForm {
    IntMatrix<N> h;
    IntMatrix<N> u;
};

template <std::size_t N>
HermiteForm<N> hermite_normal_form(const IntMatrix<N>& m) {
    IntMatrix<N> h = m;
    IntMatrix<N> u = IntMatrix<N>::identity();
    auto row_axpy = [](IntMatrix<N>& x, std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t j = 0; j < N; ++j) x.a[dst][j] = checked_sub(x.a[dst][j], checked_mul(q, x.a[src][j]));
    };
    for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t r = c + 1; r < N; ++r) {
            while (h.a[r][c] != 0) {
                std::int64_t q = h.a[c][c] / h.a[r][c];
                row_axpy(h, c, r, q);
                row_axpy(u, c, r, q);
                std::swap(h.a[c], h.a[r]);
                std::swap(u.a[c], u.a[r]);
            }
        }
        if (h.a[c][c] == 0) throw DomainError("singular matrix has no square Hermite form");
        if (h.a[c][c] < 0) {
            for (std::size_t j = 0; j < N; ++j) {
                h.a[c][j] = checked_neg(h.a[c][j]);
                u.a[c][j] = checked_neg(u.a[c][j]);
            }
        }
        for (std::size_t r = 0; r < c; ++r) {
            std::int64_t q = floor_div(h.a[r][c], h.a[c][c]);
            if (q != 0) {
                row_axpy(h, r, c, q);
                row_axpy(u, r, c, q);
            }
        }
    }
    return {h, u};
}

/// Unimodular u such that u * v has zero entries in rows rank..N-1 for every
/// vector v in the list; rank is the rank of the list.
template <std::size_t N>
struct AdaptedBasis {
    IntMatrix<N> u;
    std::size_t rank;
};

template <std::size_t N>
AdaptedBasis<N> adapted_basis(const std::vector<IntVector<N>>& vectors) {
    // Work on the N x m matrix whose columns are the vectors.
    std::size_t m = vectors.size();
    std::vector<std::array<std::int64_t, N>> colmajor(vectors.begin(), vectors.end());
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return colmajor[j][i]; };
    IntMatrix<N> u = IntMatrix<N>::identity();
    auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t j = 0; j < m; ++j) at(dst, j) = checked_sub(at(dst, j), checked_mul(q, at(src, j)));
        for (std::size_t j = 0; j < N; ++j) u.a[dst][j] = checked_sub(u.a[dst][j], checked_mul(q, u.a[src][j]));
    };
    auto row_swap = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < m; ++j) std::swap(at(r1, j), at(r2, j));
        std::swap(u.a[r1], u.a[r2]);
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < N; ++col) {
        for (std::size_t r = rank + 1; r < N; ++r) {
            while (at(r, col) != 0) {
                std::int64_t q = at(rank, col) / at(r, col);
                row_axpy(rank, r, q);
                row_swap(rank, r);
            }
        }
        if (at(rank, col) != 0) ++rank;
    }
    return {u, rank};
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const IntMatrix<N>& m) {
    os << '[';
    for (std::size_t i = 0; i < N; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < N; ++j) os << (j ? "," : "") << m.a[i][j];
        os << ']';
    }
    return os << ']';
}

}  // namespace latpoly
