#include "latpoly/equivalence.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace latpoly {

namespace {

template <std::size_t K>
std::int64_t frame_det(const std::array<IntVector<K>, K + 1>& f) {
    IntMatrix<K> m;
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j) m(j, i) = checked_sub(f[i + 1][j], f[0][j]);
    return determinant(m);
}

void append_int(std::string& out, std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

template <std::size_t K>
std::string serialize(const std::vector<IntVector<K>>& pts) {
    std::string out;
    append_int(out, K, 1);
    append_int(out, pts.size(), 4);
    for (const auto& p : pts)
        for (auto e : p) append_int(out, static_cast<std::uint64_t>(e) ^ (std::uint64_t{1} << 63), 8);
    return out;
}

// Minimum over all ordered frames of minimal positive volume of the sorted
// Hermite-normalized image of the point set.
template <std::size_t K>
std::string canonical_form(const std::vector<IntVector<K>>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::array<std::size_t, K + 1>> frames;
    std::int64_t best_vol = 0;
    std::array<std::size_t, K + 1> idx{};
    for (std::size_t i = 0; i <= K; ++i) idx[i] = i;
    if (n < K + 1) throw DomainError("not enough points for a frame");
    while (true) {
        std::array<IntVector<K>, K + 1> f;
        for (std::size_t i = 0; i <= K; ++i) f[i] = pts[idx[i]];
        std::int64_t v = checked_abs(frame_det<K>(f));
        if (v != 0 && (best_vol == 0 || v <= best_vol)) {
            if (v < best_vol || best_vol == 0) frames.clear();
            best_vol = v;
            frames.push_back(idx);
        }
        // next increasing tuple
        std::size_t pos = K + 1;
        while (pos > 0 && idx[pos - 1] == n - (K + 1 - (pos - 1))) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i <= K; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (frames.empty()) throw DomainError("configuration is not full-dimensional");

    std::string best;
    std::vector<IntVector<K>> image(n);
    for (auto frame : frames) {
        std::sort(frame.begin(), frame.end());
        do {
            const IntVector<K>& base = pts[frame[0]];
            IntMatrix<K> d;
            for (std::size_t i = 0; i < K; ++i)
                for (std::size_t j = 0; j < K; ++j) d(j, i) = checked_sub(pts[frame[i + 1]][j], base[j]);
            const IntMatrix<K> u = hermite_normal_form<K>(d).u;
            for (std::size_t t = 0; t < n; ++t) {
                IntVector<K> diff{};
                for (std::size_t j = 0; j < K; ++j) diff[j] = checked_sub(pts[t][j], base[j]);
                image[t] = u * diff;
            }
            std::sort(image.begin(), image.end());
            std::string key = serialize<K>(image);
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(frame.begin(), frame.end()));
    }
    return best;
}

std::vector<int> vertex_flags(const std::vector<Point3>& pts) {
    std::vector<int> flags(pts.size(), 0);
    auto v = vertices(PointConfiguration(pts));
    for (std::size_t i = 0; i < pts.size(); ++i) flags[i] = std::binary_search(v.begin(), v.end(), pts[i]) ? 1 : 0;
    return flags;
}

std::vector<std::int64_t> volume_multiset(const std::vector<Point3>& p) {
    std::vector<std::int64_t> out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) out.push_back(tetra_volume(p[i], p[j], p[k], p[l]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<UnimodularAffineMap> map_from_corresponding_points(const PointConfiguration& a,
                                                                 const PointConfiguration& b) {
    if (a.size() != b.size()) throw DomainError("configurations differ in size");
    if (a.dim() != 3 || b.dim() != 3) throw DomainError("configurations must be 3-dimensional");
    // First affinely independent 4-tuple of a.
    const std::size_t n = a.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (signed_volume(a[0], a[i], a[j], a[k]) == 0) continue;
                std::array<Point3, 4> src{a[0], a[i], a[j], a[k]};
                std::array<Point3, 4> dst{b[0], b[i], b[j], b[k]};
                auto m = forced_map(src, dst);
                if (!m) return std::nullopt;
                for (std::size_t t = 0; t < n; ++t)
                    if ((*m)(a[t]) != b[t]) return std::nullopt;
                return m;
            }
    throw DomainError("configuration is not full-dimensional");
}

std::optional<UnimodularAffineMap> z_equivalent(const PointConfiguration& a, const PointConfiguration& b) {
    if (a.dim() != 3 || b.dim() != 3) throw DomainError("configurations must be 3-dimensional");
    const std::vector<Point3> pa = lattice_points_in_hull(a);
    const std::vector<Point3> pb = lattice_points_in_hull(b);
    if (pa.size() != pb.size()) return std::nullopt;
    const std::size_t n = pa.size();
    if (n <= 8 && volume_multiset(pa) != volume_multiset(pb)) return std::nullopt;

    // Frame of a: lexicographically first affinely independent 4 points.
    std::array<std::size_t, 4> fa{};
    bool found = false;
    for (std::size_t i = 1; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
            for (std::size_t k = j + 1; k < n && !found; ++k)
                if (signed_volume(pa[0], pa[i], pa[j], pa[k]) != 0) {
                    fa = {0, i, j, k};
                    found = true;
                }
    const std::array<Point3, 4> src{pa[fa[0]], pa[fa[1]], pa[fa[2]], pa[fa[3]]};
    const std::int64_t vol = tetra_volume(src[0], src[1], src[2], src[3]);
    const auto flag_a = vertex_flags(pa);
    const auto flag_b = vertex_flags(pb);

    std::array<std::size_t, 4> t{};
    for (t[0] = 0; t[0] < n; ++t[0]) {
        if (flag_b[t[0]] != flag_a[fa[0]]) continue;
        for (t[1] = 0; t[1] < n; ++t[1]) {
            if (t[1] == t[0] || flag_b[t[1]] != flag_a[fa[1]]) continue;
            for (t[2] = 0; t[2] < n; ++t[2]) {
                if (t[2] == t[0] || t[2] == t[1] || flag_b[t[2]] != flag_a[fa[2]]) continue;
                for (t[3] = 0; t[3] < n; ++t[3]) {
                    if (t[3] == t[0] || t[3] == t[1] || t[3] == t[2] || flag_b[t[3]] != flag_a[fa[3]]) continue;
                    const std::array<Point3, 4> dst{pb[t[0]], pb[t[1]], pb[t[2]], pb[t[3]]};
                    if (tetra_volume(dst[0], dst[1], dst[2], dst[3]) != vol) continue;
                    auto m = forced_map(src, dst);
                    if (!m) continue;
                    std::vector<Point3> img;
                    img.reserve(n);
                    for (const auto& p : pa) img.push_back((*m)(p));
                    std::sort(img.begin(), img.end());
                    if (img == pb) return m;
                }
            }
        }
    }
    return std::nullopt;
}

std::string canonical_key(const PointConfiguration& cfg) {
    if (cfg.dim() != 3) throw DomainError("canonical key needs a 3-dimensional configuration");
    std::vector<IntVector<3>> pts;
    for (const auto& p : lattice_points_in_hull(cfg)) pts.push_back(p.to_array());
    return canonical_form<3>(pts);
}

std::string canonical_key_2d(const std::vector<Point2>& lattice_points) {
    std::vector<IntVector<2>> pts;
    for (const auto& p : lattice_points) pts.push_back(p.to_array());
    return canonical_form<2>(pts);
}

std::string hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace latpoly
