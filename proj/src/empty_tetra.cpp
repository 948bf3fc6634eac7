#include "latpoly/empty_tetra.hpp"

#include <algorithm>

namespace latpoly {

Tetra standard_tetra(std::int64_t p, std::int64_t q) { return {Point3{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {p, q, 1}}; }

bool is_empty_tetra_bruteforce(const Tetra& t) {
    if (signed_volume(t[0], t[1], t[2], t[3]) == 0) throw DomainError("tetrahedron is degenerate");
    return lattice_points_in_hull(std::span<const Point3>(t)).size() == 4;
}

bool lemma_a_predicate(std::int64_t a, std::int64_t b, std::int64_t q) {
    if (q == 0) throw DomainError("q must be nonzero");
    q = checked_abs(q);
    if (mod(a, q) == mod(1, q) && gcd(b, q) == 1) return true;
    if (mod(b, q) == mod(1, q) && gcd(a, q) == 1) return true;
    if (mod(checked_add(a, b), q) == 0 && gcd(a, q) == 1) return true;
    return false;
}

std::optional<std::array<std::int64_t, 3>> standard_apex_coordinates(const Point3& u0, const Point3& u1,
                                                                     const Point3& u2, const Point3& apex) {
    const Point3 d1 = u1 - u0, d2 = u2 - u0;
    const Point3 n = cross(d1, d2);
    if (content(n) != 1) return std::nullopt;
    // w with w . n = 1
    auto e1 = extended_gcd(n.x, n.y);
    auto e2 = extended_gcd(e1.g, n.z);
    const Point3 w{checked_mul(e2.x, e1.x), checked_mul(e2.x, e1.y), e2.y};
    const Matrix3 b = Matrix3::from_columns({d1.to_array(), d2.to_array(), w.to_array()});
    const Point3 r = unimodular_inverse(b) * (apex - u0);
    return std::array<std::int64_t, 3>{r.x, r.y, r.z};
}

TpqClass canonical_class(std::int64_t p, std::int64_t q) {
    if (q < 1) throw DomainError("q must be positive");
    if (gcd(p, q) != 1) throw DomainError("gcd(p, q) must be 1");
    if (q == 1) return {1, 1};
    const std::int64_t r = mod(p, q), inv = mod_inverse(r, q);
    const std::int64_t best = std::min({r, q - r, inv, q - inv});
    return {best, q};
}

EmptyTetraClass classify_empty(const Tetra& t) {
    if (!is_empty_tetra_bruteforce(t)) throw DomainError("tetrahedron is not empty");
    const std::int64_t q = tetra_volume(t[0], t[1], t[2], t[3]);
    auto search = [&](std::int64_t p) -> std::optional<UnimodularAffineMap> {
        const Tetra target = standard_tetra(p, q);
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            const Tetra src{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]};
            if (auto m = forced_map(src, target)) return m;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    };
    for (std::int64_t p = 1; p <= q; ++p) {
        if (gcd(p, q) != 1) continue;
        if (!search(p)) continue;
        const TpqClass cls = canonical_class(p, q);
        auto m = search(cls.p);
        if (!m) throw std::logic_error("canonical representative not reached");
        return {cls, *m};
    }
    throw std::logic_error("empty tetrahedron matches no T(p, q)");
}

UnimodularAffineMap vertex_to_origin_map(std::int64_t p, std::int64_t q, int i) {
    if (q < 1 || p < 1 || p > q || gcd(p, q) != 1) throw DomainError("need 1 <= p <= q with gcd(p, q) = 1");
    const std::int64_t pp = q == 1 ? 1 : mod_inverse(p, q);
    Matrix3 m;
    switch (i) {
        case 0:
            return UnimodularAffineMap::identity();
        case 1:
            m.a = {{{-1, 0, p - 1}, {0, -1, q}, {0, 0, 1}}};
            return {m, {1, 0, 0}};
        case 2:
            m.a = {{{pp, (1 - p * pp) / q, 0}, {q, -p, 0}, {0, 0, -1}}};
            return {m, {0, 0, 1}};
        case 3:
            m.a = {{{-pp, (p * pp - 1) / q, 1 - pp}, {-q, p, -q}, {0, 0, -1}}};
            return {m, {pp, q, 1}};
        default:
            throw DomainError("vertex index must be in 0..3");
    }
}

UnimodularAffineMap vertex_to_origin_map(const TpqClass& c, int i) { return vertex_to_origin_map(c.p, c.q, i); }

std::vector<UnimodularAffineMap> unimodular_automorphisms(const Tetra& t) {
    if (signed_volume(t[0], t[1], t[2], t[3]) == 0) throw DomainError("not a tetrahedron");
    std::vector<UnimodularAffineMap> out;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        const Tetra dst{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]};
        if (auto m = forced_map(t, dst)) out.push_back(*m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool lambda_contains(const LambdaPQ& l, const RationalPoint3& v) {
    if (l.q < 1) throw DomainError("q must be positive");
    const Rational qr(l.q);
    const Rational wx = v.x * qr, wy = v.y * qr, wz = v.z * qr;
    if (!wx.is_integer() || !wy.is_integer() || !wz.is_integer()) return false;
    return mod(checked_add(wy.num(), wx.num()), l.q) == 0 &&
           mod(checked_sub(wz.num(), checked_mul(l.p, wx.num())), l.q) == 0;
}

RationalMatrix3 lambda_matrix(std::int64_t p, std::int64_t q) {
    // n = lambda^-1 has columns (0,0,1), (p,q,1), (1,0,0).
    const Matrix3 n = Matrix3::from_columns({IntVector<3>{0, 0, 1}, IntVector<3>{p, q, 1}, IntVector<3>{1, 0, 0}});
    std::int64_t d = determinant(n);
    Matrix3 adj = adjugate(n);
    if (d < 0) {
        d = checked_neg(d);
        for (auto& r : adj.a)
            for (auto& e : r) e = checked_neg(e);
    }
    return {adj, d};
}

bool verify_change_of_coordinates(std::int64_t p, std::int64_t q) {
    if (q < 1 || gcd(p, q) != 1) throw DomainError("need q >= 1 and gcd(p, q) = 1");
    const RationalMatrix3 lam = lambda_matrix(p, q);
    const LambdaPQ l{p, q};
    // lambda(Z^3) is contained in Lambda(p, q).
    for (int j = 0; j < 3; ++j) {
        const RationalPoint3 col{Rational(lam.numer(0, j), lam.denom), Rational(lam.numer(1, j), lam.denom),
                                 Rational(lam.numer(2, j), lam.denom)};
        if (!lambda_contains(l, col)) return false;
    }
    // Lambda(p, q) is contained in lambda(Z^3): lambda^-1 maps its generators into Z^3.
    const Matrix3 n = Matrix3::from_columns({IntVector<3>{0, 0, 1}, IntVector<3>{p, q, 1}, IntVector<3>{1, 0, 0}});
    const Point3 g = n * Point3{1, -1, p};
    if (g.x % q != 0 || g.y % q != 0 || g.z % q != 0) return false;
    return lam.denom == q;
}

RectangleCheck fundamental_rectangle_check(std::int64_t p, std::int64_t q) {
    if (q < 2) throw DomainError("q must be at least 2");
    if (p < 1 || p > q - 1) throw DomainError("p must lie in 1..q-1");
    if (gcd(p, q) != 1) throw DomainError("gcd(p, q) must be 1");
    const std::int64_t pp = mod_inverse(p, q);
    // Everything scaled by 2q.
    const Point3 pt{2 * pp, -2 * pp, 2};
    const Point3 t2[3] = {{0, 0, 0}, {2 * q, -2 * q, 0}, {q, -q, q}};
    const Point3 t1[3] = {{0, 0, 0}, {2 * q, -2 * q, 0}, {2 * q, -2 * q, q}};
    return {Hull(t2).contains(pt), Hull(t1).contains(pt)};
}

}  // namespace latpoly
