#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/polygon.hpp"

namespace latpoly {

enum class Verdict { Minimal, QuasiMinimal, Neither, NotApplicable };

std::string verdict_name(Verdict v);

/// Lattice points of conv(cfg) other than v; v must be a vertex of conv(cfg).
PointConfiguration vertex_deletion(const PointConfiguration& cfg, const Point3& v);

struct DeletedVertex {
    Point3 vertex;
    int dim;
    /// Width of P^v within its affine hull (0 when it is a point).
    std::int64_t width;
    /// Width-one functional when P^v is full-dimensional of width one.
    std::optional<IntegerFunctional> witness;
    bool in_vert_star;
};

struct MinimalityReport {
    Verdict verdict = Verdict::NotApplicable;
    int dim = 0;
    std::int64_t width = 0;
    std::size_t size = 0;
    std::vector<Point3> vertices;
    std::vector<Point3> vert_star;
    std::vector<DeletedVertex> deleted;
};

/// Works for full-dimensional inputs of dimension 2 or 3 (a polygon given in
/// the plane z = 0 counts as 2-dimensional).
MinimalityReport minimality_report(const PointConfiguration& cfg);

Verdict classify_2d_minimality(std::span<const Point2> poly);

struct ProjectionReport {
    std::size_t size = 0;
    /// At most 11 lattice points: nothing further to check.
    bool small_case = false;
    bool projection_found = false;
    Point3 direction{};
    /// Lattice points and vertices of the projected polygon.
    std::vector<Point2> projected;
    std::vector<Point2> projected_vertices;
    bool unique_preimages = false;
    /// The projection maps Vert*(P) bijectively onto Vert*(P').
    bool vert_star_bijects = false;
    Verdict projected_verdict = Verdict::NotApplicable;
    std::string projected_key;
};

ProjectionReport projection_dichotomy_check(const PointConfiguration& cfg);

/// conv{(1,0,0), (-1,0,0), (0,-1,k), (0,1,k)}, plus (0,0,k+1) if requested.
PointConfiguration infinite_family_member(std::int64_t k, bool with_apex = false);

/// Minimal and quasi-minimal polygon classes with at most max_size lattice
/// points, from the exhaustive growth search.
struct MinimalPolygon {
    PolygonClass cls;
    Verdict verdict;
};
std::vector<MinimalPolygon> minimal_polygons(std::size_t max_size = 6);

}  // namespace latpoly
