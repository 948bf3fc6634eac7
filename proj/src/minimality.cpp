#include "latpoly/minimality.hpp"

#include <algorithm>

#include "latpoly/equivalence.hpp"
#include "latpoly/width.hpp"

namespace latpoly {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Minimal: return "minimal";
        case Verdict::QuasiMinimal: return "quasi-minimal";
        case Verdict::Neither: return "neither";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

PointConfiguration vertex_deletion(const PointConfiguration& cfg, const Point3& v) {
    const auto vs = vertices(cfg);
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) throw DomainError("point is not a vertex of the hull");
    std::vector<Point3> rest;
    for (const auto& p : lattice_points_in_hull(cfg))
        if (p != v) rest.push_back(p);
    return PointConfiguration(std::move(rest));
}

MinimalityReport minimality_report(const PointConfiguration& cfg) {
    if (cfg.dim() < 2) throw DomainError("minimality needs dimension 2 or 3");
    MinimalityReport r;
    const PointConfiguration all(lattice_points_in_hull(cfg));
    r.dim = all.dim();
    r.size = all.size();
    r.width = lattice_width(all).width;
    r.vertices = vertices(all);
    if (r.width < 2) return r;
    for (const auto& v : r.vertices) {
        const PointConfiguration rest = vertex_deletion(all, v);
        DeletedVertex d{v, rest.dim(), 0, std::nullopt, false};
        if (d.dim >= 1) d.width = lattice_width(rest).width;
        if (d.dim < r.dim) {
            d.in_vert_star = true;
        } else if (d.width == 1) {
            d.in_vert_star = true;
            d.witness = lattice_width(rest).witness;
        }
        if (d.in_vert_star) r.vert_star.push_back(v);
        r.deleted.push_back(d);
    }
    if (r.vert_star.size() == r.vertices.size()) r.verdict = Verdict::Minimal;
    else if (r.vert_star.size() + 1 == r.vertices.size()) r.verdict = Verdict::QuasiMinimal;
    else r.verdict = Verdict::Neither;
    return r;
}

Verdict classify_2d_minimality(std::span<const Point2> poly) {
    const PointConfiguration cfg = embed_plane(poly);
    if (cfg.dim() != 2) throw DomainError("polygon must be 2-dimensional");
    return minimality_report(cfg).verdict;
}

namespace {

Point3 kernel_direction(const std::vector<Point3>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            const Point3 c = cross(fs[i], fs[j]);
            if (!is_zero(c)) return primitive(c);
        }
    // all functionals parallel: any primitive vector orthogonal to them
    const Point3 f = fs.front();
    for (const Point3& e : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}) {
        const Point3 c = cross(f, e);
        if (!is_zero(c)) return primitive(c);
    }
    throw std::logic_error("zero functional");
}

}  // namespace

ProjectionReport projection_dichotomy_check(const PointConfiguration& cfg) {
    const MinimalityReport m = minimality_report(cfg);
    if (m.dim != 3 || (m.verdict != Verdict::Minimal && m.verdict != Verdict::QuasiMinimal))
        throw DomainError("input must be a minimal or quasi-minimal 3-polytope");
    ProjectionReport r;
    r.size = m.size;
    if (m.size <= 11) {
        r.small_case = true;
        return r;
    }
    std::vector<Point3> fs;
    for (const auto& d : m.deleted)
        if (d.witness) fs.push_back(d.witness->linear());
    for (const auto& d : m.deleted)
        if (d.in_vert_star && !d.witness) return r;  // a dimension drop gives no functional
    if (fs.empty()) return r;
    const Point3 dir = kernel_direction(fs);
    for (const auto& f : fs)
        if (dot(f, dir) != 0) return r;
    r.projection_found = true;
    r.direction = dir;

    // rows 2 and 3 of a unimodular U with U * dir = e1
    const Matrix3 b = transpose(complete_row_to_basis(dir));
    const Matrix3 u = unimodular_inverse(b);
    auto project = [&](const Point3& p) {
        const Point3 q = u * p;
        return Point2{q.y, q.z};
    };
    const auto lp = lattice_points_in_hull(cfg);
    std::vector<Point2> images;
    for (const auto& p : lp) images.push_back(project(p));
    r.projected = polygon_lattice_points(images);
    r.projected_vertices = drop_z(vertices(embed_plane(r.projected)));
    r.unique_preimages = std::all_of(r.projected_vertices.begin(), r.projected_vertices.end(), [&](const Point2& w) {
        return std::count(images.begin(), images.end(), w) == 1;
    });
    const MinimalityReport pm = minimality_report(embed_plane(r.projected));
    r.projected_verdict = pm.verdict;
    r.projected_key = canonical_key_2d(r.projected);

    std::vector<Point2> star_img;
    for (const auto& v : m.vert_star) star_img.push_back(project(v));
    std::sort(star_img.begin(), star_img.end());
    const bool injective = std::adjacent_find(star_img.begin(), star_img.end()) == star_img.end();
    std::vector<Point2> star2 = drop_z(pm.vert_star);
    std::sort(star2.begin(), star2.end());
    r.vert_star_bijects = injective && star_img == star2;
    return r;
}

PointConfiguration infinite_family_member(std::int64_t k, bool with_apex) {
    if (k < 1) throw DomainError("k must be positive");
    std::vector<Point3> pts{{1, 0, 0}, {-1, 0, 0}, {0, -1, k}, {0, 1, k}};
    if (with_apex) pts.push_back({0, 0, checked_add(k, 1)});
    return PointConfiguration(std::move(pts));
}

std::vector<MinimalPolygon> minimal_polygons(std::size_t max_size) {
    std::vector<MinimalPolygon> out;
    const auto classes = grow_polygons(max_size);
    for (std::size_t n = 3; n < classes.size(); ++n)
        for (const auto& c : classes[n]) {
            const Verdict v = classify_2d_minimality(c.points);
            if (v == Verdict::Minimal || v == Verdict::QuasiMinimal) out.push_back({c, v});
        }
    return out;
}

}  // namespace latpoly
