#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

using Tetra = std::array<Point3, 4>;

/// Equivalence class T(p, q) of empty tetrahedra; p is the least
/// representative in 1..q of the orbit {+-p, +-p^-1 mod q}.
struct TpqClass {
    std::int64_t p = 0;
    std::int64_t q = 1;
    bool operator==(const TpqClass&) const = default;
};

struct EmptyTetraClass {
    TpqClass cls;
    /// Sends the input vertices, in some order, onto standard_tetra(p, q).
    UnimodularAffineMap witness;
};

/// conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)}.
Tetra standard_tetra(std::int64_t p, std::int64_t q);

/// The tetrahedron has no lattice points besides its vertices (direct scan).
bool is_empty_tetra_bruteforce(const Tetra& t);

/// Emptiness of conv{(0,0,0), (1,0,0), (0,1,0), (a,b,q)} by the congruence
/// criterion on (a, b, q); q != 0.
bool lemma_a_predicate(std::int64_t a, std::int64_t b, std::int64_t q);

/// When (u0, u1, u2) is a unimodular triangle, coordinates (a, b, q) of the
/// apex after the unimodular map sending the triangle to the standard one.
std::optional<std::array<std::int64_t, 3>> standard_apex_coordinates(const Point3& u0, const Point3& u1,
                                                                     const Point3& u2, const Point3& apex);

TpqClass canonical_class(std::int64_t p, std::int64_t q);
EmptyTetraClass classify_empty(const Tetra& t);

/// Unimodular map sending T(p, q) onto T(p', q) (p' = p^-1 mod q) that takes
/// vertex i to the origin; i in 0..3 indexes standard_tetra order.
UnimodularAffineMap vertex_to_origin_map(std::int64_t p, std::int64_t q, int i);
UnimodularAffineMap vertex_to_origin_map(const TpqClass& c, int i);

/// All unimodular maps fixing conv(t) setwise.
std::vector<UnimodularAffineMap> unimodular_automorphisms(const Tetra& t);

/// The lattice Z^3 + Z (1, -1, p) / q.
struct LambdaPQ {
    std::int64_t p;
    std::int64_t q;
};

bool lambda_contains(const LambdaPQ& l, const RationalPoint3& v);

/// Rational matrix lambda(p, q) = numer / denom relating the two
/// coordinate systems of T(p, q).
struct RationalMatrix3 {
    Matrix3 numer;
    std::int64_t denom;
};
RationalMatrix3 lambda_matrix(std::int64_t p, std::int64_t q);

/// lambda(p, q) maps Z^3 onto Lambda(p, q) (both inclusions checked).
bool verify_change_of_coordinates(std::int64_t p, std::int64_t q);

struct RectangleCheck {
    bool in_t2;
    bool in_t1;
};

/// Position of (p'/q, -p'/q, 1/q) relative to the two triangles of the
/// fundamental rectangle, p' = p^-1 mod q.
RectangleCheck fundamental_rectangle_check(std::int64_t p, std::int64_t q);

}  // namespace latpoly
