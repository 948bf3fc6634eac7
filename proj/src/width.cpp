#include "latpoly/width.hpp"

#include <algorithm>
#include <limits>

namespace latpoly {

namespace {

template <std::size_t K>
using Vec = IntVector<K>;

template <std::size_t K>
std::int64_t dotk(const Vec<K>& a, const Vec<K>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < K; ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

template <std::size_t K>
std::int64_t det_k(const IntMatrix<K>& m) {
    if constexpr (K == 1) return m(0, 0);
    else return determinant(m);
}

template <std::size_t K>
IntMatrix<K> adj_k(const IntMatrix<K>& m) {
    if constexpr (K == 1) return IntMatrix<1>::identity();
    else return adjugate(m);
}

template <std::size_t K>
struct Reduced {
    std::int64_t width;
    Vec<K> c;
    std::int64_t bound;
};

template <std::size_t K>
bool first_nonzero_positive(const Vec<K>& c) {
    for (auto e : c)
        if (e != 0) return e > 0;
    return false;
}

// Rows of the returned matrix are the lexicographically first independent
// K-tuple of differences pts[i] - pts[0].
template <std::size_t K>
IntMatrix<K> independent_rows(const std::vector<Vec<K>>& d) {
    const std::size_t n = d.size();
    IntMatrix<K> m;
    if constexpr (K == 1) {
        for (const auto& v : d)
            if (v[0] != 0) {
                m(0, 0) = v[0];
                return m;
            }
    } else if constexpr (K == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                m.a = {d[i], d[j]};
                if (det_k(m) != 0) return m;
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    m.a = {d[i], d[j], d[k]};
                    if (det_k(m) != 0) return m;
                }
    }
    throw DomainError("configuration is not full-dimensional");
}

template <std::size_t K>
Reduced<K> min_width(const std::vector<Vec<K>>& pts) {
    std::vector<Vec<K>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec<K> v{};
        for (std::size_t j = 0; j < K; ++j) v[j] = checked_sub(pts[i][j], pts[0][j]);
        diffs.push_back(v);
    }
    const IntMatrix<K> m = independent_rows<K>(diffs);
    const std::int64_t det = det_k(m);
    const IntMatrix<K> adj = adj_k(m);

    auto spread = [&](const Vec<K>& c, std::int64_t cap) -> std::int64_t {
        std::int64_t lo = dotk(c, pts[0]), hi = lo;
        for (const auto& p : pts) {
            std::int64_t v = dotk(c, p);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            if (hi - lo > cap) return hi - lo;
        }
        return hi - lo;
    };

    Reduced<K> best{std::numeric_limits<std::int64_t>::max(), {}, 0};
    auto consider = [&](const Vec<K>& c) {
        std::int64_t s = spread(c, best.width);
        if (s < best.width || (s == best.width && c < best.c)) {
            best.width = s;
            best.c = c;
        }
    };
    for (std::size_t i = 0; i < K; ++i) {
        Vec<K> e{};
        e[i] = 1;
        consider(e);
    }

    Vec<K> y{};
    for (std::int64_t r = 1; r <= best.width; ++r) {
        // all y with max norm exactly r
        std::int64_t total = 1;
        for (std::size_t i = 0; i < K; ++i) total = checked_mul(total, 2 * r + 1);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::int64_t t = idx;
            bool on_shell = false;
            for (std::size_t i = 0; i < K; ++i) {
                y[i] = t % (2 * r + 1) - r;
                t /= 2 * r + 1;
                if (y[i] == r || y[i] == -r) on_shell = true;
            }
            if (!on_shell) continue;
            Vec<K> num = adj * y;
            bool integral = true;
            Vec<K> c{};
            for (std::size_t i = 0; i < K && integral; ++i) {
                if (num[i] % det != 0) integral = false;
                else c[i] = num[i] / det;
            }
            if (!integral || !first_nonzero_positive<K>(c)) continue;
            std::int64_t g = 0;
            for (auto e : c) g = gcd(g, e);
            if (g != 1) continue;
            consider(c);
        }
        best.bound = r;
    }
    if (best.bound < best.width) best.bound = best.width;
    return best;
}

IntegerFunctional normalized(Point3 lin, const PointConfiguration& cfg) {
    if (lin.x < 0 || (lin.x == 0 && (lin.y < 0 || (lin.y == 0 && lin.z < 0)))) lin = -lin;
    std::int64_t mn = dot(lin, cfg[0]);
    for (const auto& p : cfg) mn = std::min(mn, dot(lin, p));
    return {lin.x, lin.y, lin.z, checked_neg(mn)};
}

template <std::size_t K>
WidthResult reduced_width(const PointConfiguration& cfg) {
    std::vector<IntVector<3>> diffs;
    for (const auto& p : cfg) diffs.push_back((p - cfg[0]).to_array());
    auto basis = adapted_basis<3>(diffs);
    std::vector<Vec<K>> pts;
    for (const auto& d : diffs) {
        auto r = basis.u * d;
        Vec<K> v{};
        for (std::size_t i = 0; i < K; ++i) v[i] = r[i];
        pts.push_back(v);
    }
    Reduced<K> red = min_width<K>(pts);
    Point3 lin{};
    for (std::size_t i = 0; i < K; ++i)
        lin = lin + red.c[i] * Point3::from_array(basis.u.row(i));
    return {red.width, normalized(lin, cfg), red.bound};
}

}  // namespace

WidthResult lattice_width(const PointConfiguration& cfg) {
    switch (cfg.dim()) {
        case 3: {
            std::vector<Vec<3>> pts;
            for (const auto& p : cfg) pts.push_back(p.to_array());
            Reduced<3> red = min_width<3>(pts);
            return {red.width, normalized(Point3::from_array(red.c), cfg), red.bound};
        }
        case 2:
            return reduced_width<2>(cfg);
        case 1:
            return reduced_width<1>(cfg);
        default:
            throw DomainError("lattice width of a point or empty set");
    }
}

std::int64_t width_of(const PointConfiguration& cfg, const IntegerFunctional& f) {
    if (is_zero(f.linear())) throw DomainError("functional with zero linear part");
    if (cfg.size() == 0) throw DomainError("empty configuration");
    std::int64_t lo = f(cfg[0]), hi = lo;
    for (const auto& p : cfg) {
        lo = std::min(lo, f(p));
        hi = std::max(hi, f(p));
    }
    if (hi == lo) throw DomainError("functional is constant on the affine hull");
    return hi - lo;
}

std::optional<WidthOneSplit> width_one_split(const PointConfiguration& cfg) {
    if (cfg.dim() < 1) return std::nullopt;
    WidthResult w = lattice_width(cfg);
    if (w.width != 1) return std::nullopt;
    WidthOneSplit s{w.witness, {}, {}};
    for (const auto& p : cfg) (w.witness(p) == 0 ? s.lower : s.upper).push_back(p);
    return s;
}

}  // namespace latpoly
