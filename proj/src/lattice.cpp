#include "latpoly/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latpoly {

int affine_dimension(std::span<const Point3> pts) {
    if (pts.empty()) return -1;
    const Point3& o = pts[0];
    std::vector<Point3> d;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] != o) d.push_back(pts[i] - o);
    if (d.empty()) return 0;
    const Point3 a = d[0];
    std::size_t j = 1;
    Point3 n{};
    for (; j < d.size(); ++j) {
        n = cross(a, d[j]);
        if (!is_zero(n)) break;
    }
    if (j == d.size()) return 1;
    for (std::size_t k = j + 1; k < d.size(); ++k)
        if (dot(n, d[k]) != 0) return 3;
    return 2;
}

PointConfiguration::PointConfiguration(std::vector<Point3> pts) : pts_(std::move(pts)) {
    std::vector<Point3> s = pts_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("configuration has repeated points");
    dim_ = affine_dimension(pts_);
}

PointConfiguration PointConfiguration::sorted() const {
    std::vector<Point3> s = pts_;
    std::sort(s.begin(), s.end());
    return PointConfiguration(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const PointConfiguration& c) {
    os << '{';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << '}';
}

UnimodularAffineMap::UnimodularAffineMap(const Matrix3& linear, const Point3& translation)
    : linear_(linear), translation_(translation), det_(determinant(linear)) {
    if (det_ != 1 && det_ != -1) throw DomainError("linear part is not unimodular");
}

PointConfiguration UnimodularAffineMap::operator()(const PointConfiguration& c) const {
    std::vector<Point3> out;
    out.reserve(c.size());
    for (const auto& p : c) out.push_back((*this)(p));
    return PointConfiguration(std::move(out));
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& other) const {
    return {linear_ * other.linear_, linear_ * other.translation_ + translation_};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    Matrix3 inv = unimodular_inverse(linear_);
    return {inv, -(inv * translation_)};
}

std::ostream& operator<<(std::ostream& os, const UnimodularAffineMap& m) {
    return os << "x -> " << m.linear() << " x + " << m.translation();
}

std::ostream& operator<<(std::ostream& os, const IntegerFunctional& f) {
    return os << f.a << "x + " << f.b << "y + " << f.c << "z + " << f.k;
}

namespace {

HalfSpace reduced(const Point3& n, std::int64_t off) {
    // n primitive-ized; off scales exactly because it is n . p for a lattice p.
    std::int64_t g = content(n);
    return {{n.x / g, n.y / g, n.z / g}, off / g};
}

void add_if_supporting(std::vector<HalfSpace>& out, const Point3& n, const Point3& base, std::span<const Point3> pts) {
    std::int64_t off = dot(n, base);
    bool le = true, ge = true;
    for (const auto& p : pts) {
        std::int64_t v = dot(n, p);
        if (v > off) le = false;
        if (v < off) ge = false;
        if (!le && !ge) return;
    }
    if (le) out.push_back(reduced(n, off));
    if (ge) out.push_back(reduced(-n, checked_neg(off)));
}

}  // namespace

Hull::Hull(std::span<const Point3> pts) {
    if (pts.empty()) throw DomainError("hull of an empty configuration");
    dim_ = affine_dimension(pts);
    lo_ = hi_ = pts[0];
    for (const auto& p : pts) {
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y), std::max(hi_.z, p.z)};
    }
    const Point3& o = pts[0];
    const std::size_t n = pts.size();
    if (dim_ == 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    Point3 nv = cross(pts[j] - pts[i], pts[k] - pts[i]);
                    if (!is_zero(nv)) add_if_supporting(inequalities_, nv, pts[i], pts);
                }
    } else if (dim_ == 2) {
        Point3 plane{};
        for (std::size_t j = 1; j < n && is_zero(plane); ++j)
            for (std::size_t k = j + 1; k < n && is_zero(plane); ++k) plane = cross(pts[j] - o, pts[k] - o);
        equalities_.push_back(reduced(plane, dot(plane, o)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Point3 m = cross(plane, pts[j] - pts[i]);
                if (!is_zero(m)) add_if_supporting(inequalities_, m, pts[i], pts);
            }
    } else if (dim_ == 1) {
        Point3 d{};
        for (std::size_t j = 1; j < n && is_zero(d); ++j) d = pts[j] - o;
        d = primitive(d);
        const Point3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        std::vector<Point3> normals;
        for (const auto& e : basis) {
            Point3 c = cross(d, e);
            if (is_zero(c)) continue;
            if (normals.empty() || !is_zero(cross(normals[0], c))) normals.push_back(c);
            if (normals.size() == 2) break;
        }
        for (const auto& c : normals) equalities_.push_back(reduced(c, dot(c, o)));
        std::int64_t mn = dot(d, o), mx = mn;
        for (const auto& p : pts) {
            mn = std::min(mn, dot(d, p));
            mx = std::max(mx, dot(d, p));
        }
        inequalities_.push_back({d, mx});
        inequalities_.push_back({-d, checked_neg(mn)});
    } else {
        equalities_.push_back({{1, 0, 0}, o.x});
        equalities_.push_back({{0, 1, 0}, o.y});
        equalities_.push_back({{0, 0, 1}, o.z});
    }
    std::sort(inequalities_.begin(), inequalities_.end());
    inequalities_.erase(std::unique(inequalities_.begin(), inequalities_.end()), inequalities_.end());
}

bool Hull::contains_scaled(const Point3& x, std::int64_t d) const {
    for (const auto& e : equalities_)
        if (dot(e.normal, x) != checked_mul(e.offset, d)) return false;
    for (const auto& h : inequalities_)
        if (dot(h.normal, x) > checked_mul(h.offset, d)) return false;
    return true;
}

bool Hull::contains(const Point3& p) const { return contains_scaled(p, 1); }

bool Hull::contains(const RationalPoint3& q) const {
    ScaledPoint s = common_denominator(q);
    return contains_scaled(s.numer, s.denom);
}

std::vector<Point3> Hull::lattice_points() const {
    std::int64_t nx = checked_add(checked_sub(hi_.x, lo_.x), 1);
    std::int64_t ny = checked_add(checked_sub(hi_.y, lo_.y), 1);
    std::int64_t nz = checked_add(checked_sub(hi_.z, lo_.z), 1);
    checked_mul(checked_mul(nx, ny), nz);
    std::vector<Point3> out;
    for (std::int64_t x = lo_.x; x <= hi_.x; ++x)
        for (std::int64_t y = lo_.y; y <= hi_.y; ++y)
            for (std::int64_t z = lo_.z; z <= hi_.z; ++z) {
                Point3 p{x, y, z};
                if (contains(p)) out.push_back(p);
            }
    return out;
}

std::size_t Hull::count_lattice_points(std::size_t cap) const {
    std::size_t n = 0;
    for (std::int64_t x = lo_.x; x <= hi_.x; ++x)
        for (std::int64_t y = lo_.y; y <= hi_.y; ++y)
            for (std::int64_t z = lo_.z; z <= hi_.z; ++z)
                if (contains(Point3{x, y, z}) && ++n > cap) return n;
    return n;
}

bool hull_contains(const PointConfiguration& cfg, const RationalPoint3& q) { return Hull(cfg.points()).contains(q); }

std::vector<Point3> lattice_points_in_hull(const PointConfiguration& cfg) {
    return Hull(cfg.points()).lattice_points();
}

std::vector<Point3> lattice_points_in_hull(std::span<const Point3> pts) { return Hull(pts).lattice_points(); }

std::vector<Point3> vertices(const PointConfiguration& cfg) {
    if (cfg.size() == 0) throw DomainError("vertices of an empty configuration");
    std::vector<Point3> out;
    if (cfg.size() == 1) return cfg.points();
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        std::vector<Point3> rest;
        for (std::size_t j = 0; j < cfg.size(); ++j)
            if (j != i) rest.push_back(cfg[j]);
        if (!Hull(rest).contains(cfg[i])) out.push_back(cfg[i]);
    }
    return out;
}

std::int64_t signed_volume(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
    return det3(p2 - p1, p3 - p1, p4 - p1);
}

std::int64_t tetra_volume(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4) {
    return checked_abs(signed_volume(p1, p2, p3, p4));
}

namespace {

// Counter-clockwise convex hull (strict vertices) of 2D points.
std::vector<std::size_t> hull_order_2d(const std::vector<Point2>& p) {
    std::vector<std::size_t> idx(p.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && cross2(p[h[k - 1]] - p[h[k - 2]], p[idx[i]] - p[h[k - 2]]) <= 0) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(p[h[k - 1]] - p[h[k - 2]], p[idx[i]] - p[h[k - 2]]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k > 1 ? k - 1 : k);
    return h;
}

}  // namespace

std::int64_t normalized_volume(const PointConfiguration& cfg) {
    if (cfg.dim() < 3) return 0;
    Hull hull(cfg.points());
    const Point3 apex = cfg[0];
    std::int64_t total = 0;
    for (const auto& f : hull.facets()) {
        if (dot(f.normal, apex) == f.offset) continue;
        std::vector<Point3> on;
        for (const auto& p : cfg)
            if (dot(f.normal, p) == f.offset) on.push_back(p);
        // Project away the coordinate where the normal is nonzero.
        int drop = f.normal.z != 0 ? 2 : (f.normal.y != 0 ? 1 : 0);
        std::vector<Point2> flat;
        for (const auto& p : on) {
            if (drop == 2) flat.push_back({p.x, p.y});
            else if (drop == 1) flat.push_back({p.x, p.z});
            else flat.push_back({p.y, p.z});
        }
        auto order = hull_order_2d(flat);
        for (std::size_t i = 1; i + 1 < order.size(); ++i)
            total = checked_add(total, tetra_volume(apex, on[order[0]], on[order[i]], on[order[i + 1]]));
    }
    return total;
}

std::optional<UnimodularAffineMap> forced_map(std::span<const Point3, 4> src, std::span<const Point3, 4> dst) {
    Matrix3 a = Matrix3::from_columns({(src[1] - src[0]).to_array(), (src[2] - src[0]).to_array(),
                                       (src[3] - src[0]).to_array()});
    std::int64_t da = determinant(a);
    if (da == 0) throw DomainError("source points are affinely dependent");
    Matrix3 b = Matrix3::from_columns({(dst[1] - dst[0]).to_array(), (dst[2] - dst[0]).to_array(),
                                       (dst[3] - dst[0]).to_array()});
    std::int64_t db = determinant(b);
    if (db != da && db != checked_neg(da)) return std::nullopt;
    Matrix3 l = b * adjugate(a);
    for (auto& r : l.a)
        for (auto& e : r) {
            if (e % da != 0) return std::nullopt;
            e /= da;
        }
    return UnimodularAffineMap(l, dst[0] - l * src[0]);
}

Matrix3 complete_row_to_basis(const Point3& v) {
    if (content(v) != 1) throw DomainError("vector is not primitive");
    auto ab = adapted_basis<3>({v.to_array()});
    // ab.u * v = +-e1, so the first column of inverse(ab.u) is +-v.
    Matrix3 w = transpose(unimodular_inverse(ab.u));
    if (Point3::from_array(w.row(0)) != v)
        for (auto& e : w.a[0]) e = checked_neg(e);
    return w;
}

}  // namespace latpoly
