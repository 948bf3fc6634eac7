#include "latpoly/invariants.hpp"

#include <algorithm>
#include <set>

namespace latpoly {

VolumeVector volume_vector(const PointConfiguration& cfg) {
    if (cfg.dim() != 3) throw DomainError("volume vector needs a 3-dimensional configuration");
    if (cfg.size() > 8) throw DomainError("volume vector is limited to at most 8 points");
    VolumeVector out;
    const std::size_t n = cfg.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) out.entries.push_back(signed_volume(cfg[i], cfg[j], cfg[k], cfg[l]));
    return out;
}

std::array<std::int64_t, 5> raw_five_point_vector(const PointConfiguration& cfg) {
    if (cfg.size() != 5) throw DomainError("five-point vector needs exactly 5 points");
    if (cfg.dim() != 3) throw DomainError("five-point vector needs a 3-dimensional configuration");
    const auto w = volume_vector(cfg).entries;
    // w = (w1234, w1235, w1245, w1345, w2345)
    return {w[4], checked_neg(w[3]), w[2], checked_neg(w[1]), w[0]};
}

FivePointVector normalize_sign(std::array<std::int64_t, 5> v) {
    int pos = 0, neg = 0;
    for (auto e : v) {
        if (e > 0) ++pos;
        if (e < 0) ++neg;
    }
    bool flip = neg > pos;
    if (neg == pos)
        for (auto e : v)
            if (e != 0) {
                flip = e > 0;
                break;
            }
    if (flip)
        for (auto& e : v) e = checked_neg(e);
    return {v};
}

FivePointVector five_point_vector(const PointConfiguration& cfg) { return normalize_sign(raw_five_point_vector(cfg)); }

std::array<std::int64_t, 5> FivePointVector::sorted_abs() const {
    auto s = v;
    std::stable_sort(s.begin(), s.end(), [](std::int64_t a, std::int64_t b) {
        if (checked_abs(a) != checked_abs(b)) return checked_abs(a) < checked_abs(b);
        return a < b;
    });
    return s;
}

Signature signature(const FivePointVector& v) {
    Signature s;
    for (auto e : v.v) {
        if (e > 0) ++s.pos;
        if (e < 0) ++s.neg;
    }
    if (s.pos < s.neg) std::swap(s.pos, s.neg);
    return s;
}

bool is_dps(const PointConfiguration& cfg) {
    std::set<Point3> sums;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        for (std::size_t j = i; j < cfg.size(); ++j)
            if (!sums.insert(cfg[i] + cfg[j]).second) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const FivePointVector& v) {
    os << '(';
    for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << v.v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Signature& s) { return os << '(' << s.pos << ',' << s.neg << ')'; }

}  // namespace latpoly
