#include "latpoly/polygon.hpp"

#include <algorithm>
#include <map>

#include "latpoly/equivalence.hpp"

namespace latpoly {

PointConfiguration embed_plane(std::span<const Point2> pts) {
    std::vector<Point3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.x, p.y, 0});
    return PointConfiguration(std::move(out));
}

std::vector<Point2> drop_z(std::span<const Point3> pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.x, p.y});
    return out;
}

std::vector<Point2> polygon_lattice_points(std::span<const Point2> pts) {
    std::vector<Point3> lifted;
    for (const auto& p : pts) lifted.push_back({p.x, p.y, 0});
    return drop_z(lattice_points_in_hull(std::span<const Point3>(lifted)));
}

std::vector<Point2> polygon_vertices_ccw(std::span<const Point2> pts) {
    std::vector<Point2> s(pts.begin(), pts.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 3) throw DomainError("polygon needs three non-collinear points");
    std::vector<Point2> h(2 * s.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        while (k >= 2 && cross2(h[k - 1] - h[k - 2], s[i] - h[k - 2]) <= 0) --k;
        h[k++] = s[i];
    }
    for (std::size_t i = s.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(h[k - 1] - h[k - 2], s[i] - h[k - 2]) <= 0) --k;
        h[k++] = s[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw DomainError("polygon needs three non-collinear points");
    return h;
}

PickCheck pick_check(std::span<const Point2> pts) {
    if (affine_dimension(embed_plane(pts).points()) != 2) throw DomainError("pick check needs a 2-dimensional polygon");
    const auto v = polygon_vertices_ccw(pts);
    std::int64_t area2 = 0, boundary = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        area2 = checked_add(area2, cross2(a, b));
        boundary = checked_add(boundary, gcd(b.x - a.x, b.y - a.y));
    }
    const auto total = static_cast<std::int64_t>(polygon_lattice_points(pts).size());
    PickCheck r{area2, boundary, total - boundary, false};
    r.holds = r.volume == total + r.interior - 2;
    return r;
}

namespace {

std::vector<PolygonClass> sorted_classes(std::map<std::string, std::vector<Point2>>& m) {
    std::vector<PolygonClass> out;
    for (auto& [k, pts] : m) out.push_back({pts, k});
    return out;
}

}  // namespace

std::vector<std::vector<PolygonClass>> grow_polygons(std::size_t max_size, std::int64_t reach) {
    std::vector<std::vector<PolygonClass>> by_size(std::max<std::size_t>(max_size + 1, 4));
    const std::vector<Point2> tri{{0, 0}, {1, 0}, {0, 1}};
    by_size[3].push_back({tri, canonical_key_2d(tri)});
    for (std::size_t n = 3; n < max_size; ++n) {
        std::map<std::string, std::vector<Point2>> next;
        for (const auto& cls : by_size[n]) {
            const auto v = polygon_vertices_ccw(cls.points);
            for (std::size_t i = 0; i < v.size(); ++i) {
                const Point2 a = v[i];
                const Point2 d = v[(i + 1) % v.size()] - a;
                const std::int64_t g = gcd(d.x, d.y);
                const Point2 step{d.x / g, d.y / g};
                // outward side of a ccw edge is to the right; choose o with
                // cross(step, o) = -1 so a + o lies at distance one outside
                const auto e = extended_gcd(step.x, step.y);
                const Point2 o{e.y, -e.x};
                for (std::int64_t t = -reach; t <= reach; ++t) {
                    const Point2 x{a.x + o.x + t * step.x, a.y + o.y + t * step.y};
                    std::vector<Point2> pts = cls.points;
                    pts.push_back(x);
                    auto lp = polygon_lattice_points(pts);
                    if (lp.size() != n + 1) continue;
                    auto key = canonical_key_2d(lp);
                    next.emplace(std::move(key), std::move(lp));
                }
            }
        }
        by_size[n + 1] = sorted_classes(next);
    }
    by_size.resize(max_size + 1);
    return by_size;
}

std::vector<std::vector<PolygonClass>> enumerate_polygons_upto5() { return grow_polygons(5); }

std::vector<PolygonClass> polygons_in_box(std::size_t size, std::int64_t box) {
    std::vector<Point2> grid;
    for (std::int64_t x = 0; x <= box; ++x)
        for (std::int64_t y = 0; y <= box; ++y) grid.push_back({x, y});
    std::map<std::string, std::vector<Point2>> found;
    std::vector<std::size_t> idx(size);
    std::vector<Point2> pick(size);
    // iterate over increasing index tuples
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
        if (depth == size) {
            if (affine_dimension(embed_plane(pick).points()) != 2) return;
            auto lp = polygon_lattice_points(pick);
            if (lp.size() != size) return;
            found.emplace(canonical_key_2d(lp), lp);
            return;
        }
        for (std::size_t i = from; i < grid.size(); ++i) {
            pick[depth] = grid[i];
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return sorted_classes(found);
}

}  // namespace latpoly
