#include "latpoly/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "latpoly/empty_tetra.hpp"
#include "latpoly/equivalence.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/width.hpp"

namespace latpoly {

std::string family_name(Family f) {
    switch (f) {
        case Family::W1_22: return "W1-(2,2)";
        case Family::W1_21: return "W1-(2,1)";
        case Family::W1_32: return "W1-(3,2)";
        case Family::W1_31: return "W1-(3,1)";
        case Family::W2_31: return "W2-(3,1)";
        case Family::W2_41: return "W2-(4,1)";
        case Family::Unsized5: return "UNSIZED5";
    }
    return "?";
}

std::string record_label(const ClassRecord& r) {
    std::ostringstream os;
    os << family_name(r.family);
    if (r.params) os << '[' << (*r.params)[0] << ',' << (*r.params)[1] << ']';
    if (r.family == Family::W2_41 && r.vector) {
        os << '[';
        for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << r.vector->v[i];
        os << ']';
    }
    return os.str();
}

PointConfiguration representative_22() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}; }

PointConfiguration representative_21(std::int64_t p, std::int64_t q) {
    return {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}, {p, q, 1}};
}

PointConfiguration representative_32(std::int64_t a, std::int64_t b) {
    return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {a, b, 1}};
}

PointConfiguration representative_31_width1() { return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}}; }

const std::vector<TableRow>& width_two_table() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> t;
        t.push_back({Family::W2_31, {{-9, 3, 3, 3, 0}}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {1, 2, 3}}});
        auto row41 = [&](std::array<std::int64_t, 5> v, Point3 a, Point3 b) {
            t.push_back({Family::W2_41, {v}, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, a, b}});
        };
        row41({-4, 1, 1, 1, 1}, {1, 1, 1}, {-2, -1, -2});
        row41({-5, 1, 1, 1, 2}, {1, 2, 1}, {-1, -1, -1});
        row41({-7, 1, 1, 2, 3}, {1, 3, 1}, {-1, -2, -1});
        row41({-11, 1, 3, 2, 5}, {2, 5, 1}, {-1, -2, -1});
        row41({-13, 3, 4, 1, 5}, {2, 5, 1}, {-1, -1, -1});
        row41({-17, 3, 5, 2, 7}, {2, 7, 1}, {-1, -2, -1});
        row41({-19, 5, 4, 3, 7}, {3, 7, 1}, {-2, -3, -1});
        row41({-20, 5, 5, 5, 5}, {2, 5, 1}, {-3, -5, -2});
        return t;
    }();
    return rows;
}

namespace {

bool hull_has_size(std::span<const Point3> pts, std::size_t n) { return Hull(pts).count_lattice_points(n) == n; }

// Width-one, signature (2,1): the collinear triple a, m, b sits at level 0
// and u, w at level 1. Builds the normalizing map directly.
ClassRecord classify_21(const PointConfiguration& pts, const FivePointVector& v) {
    std::size_t m = 5;
    std::vector<std::size_t> ends, tops;
    for (std::size_t i = 0; i < 5; ++i) {
        if (v.v[i] < 0) m = i;
        else if (v.v[i] > 0) ends.push_back(i);
        else tops.push_back(i);
    }
    if (m == 5 || ends.size() != 2 || tops.size() != 2) throw std::logic_error("unexpected (2,1) vector");
    const std::int64_t q = checked_neg(v.v[m]) / 2;
    for (std::size_t choice = 0; choice < 2; ++choice) {
        const Point3 o = pts[m];
        const Point3 d = pts[ends[0]] - o;
        const Point3 e = pts[tops[choice]] - o;
        const Point3 g = pts[tops[1 - choice]] - o;
        const Point3 n = cross(d, e);
        if (content(n) != 1) continue;
        auto e1 = extended_gcd(n.x, n.y);
        auto e2 = extended_gcd(e1.g, n.z);
        const Point3 w{checked_mul(e2.x, e1.x), checked_mul(e2.x, e1.y), e2.y};
        const Matrix3 binv = unimodular_inverse(Matrix3::from_columns({d.to_array(), e.to_array(), w.to_array()}));
        const Point3 r1 = Point3::from_array(binv.row(0));
        const Point3 r2 = Point3::from_array(binv.row(1));
        const Point3 r3 = Point3::from_array(binv.row(2));
        const std::int64_t r3g = dot(r3, g);
        if (checked_abs(r3g) != q) continue;
        const std::int64_t num = checked_sub(1, dot(r2, g));
        if (num % r3g != 0) continue;
        const Point3 f = r2 + (num / r3g) * r3;
        const std::int64_t sigma = r3g > 0 ? 1 : -1;
        const std::int64_t p0 = dot(r1, g);
        std::int64_t p = q == 1 ? 0 : mod(p0, q);
        Point3 row0;
        if (2 * p <= q) {
            row0 = r1 + (sigma * ((p - p0) / q)) * r3;
        } else {
            p = q - p;
            row0 = -(r1 + (sigma * ((-p0 - p) / q)) * r3);
        }
        Matrix3 lin;
        lin.a = {{row0.to_array(), (sigma * r3).to_array(), f.to_array()}};
        const UnimodularAffineMap map(lin, -(lin * o));
        const PointConfiguration rep = representative_21(p, q);
        std::vector<Point3> img, want = rep.points();
        for (const auto& x : pts) img.push_back(map(x));
        std::sort(img.begin(), img.end());
        std::sort(want.begin(), want.end());
        if (img != want) continue;
        ClassRecord r;
        r.family = Family::W1_21;
        r.params = std::array<std::int64_t, 2>{p, q};
        r.representative = rep;
        r.witness = map;
        r.vector = five_point_vector(rep);
        return r;
    }
    throw std::logic_error("(2,1) normalization failed");
}

}  // namespace

ClassRecord classify_size5(const PointConfiguration& cfg) {
    if (cfg.dim() < 3) throw DomainError("classification needs a 3-dimensional configuration");
    const std::vector<Point3> lp = lattice_points_in_hull(cfg);
    ClassRecord r;
    r.size = lp.size();
    if (lp.size() != 5) {
        r.family = Family::Unsized5;
        r.representative = PointConfiguration(lp);
        r.width = lattice_width(r.representative).width;
        return r;
    }
    const PointConfiguration pts(lp);
    const FivePointVector v = five_point_vector(pts);
    const Signature sig = signature(v);
    const std::int64_t width = lattice_width(pts).width;

    auto finish = [&](Family fam, const PointConfiguration& rep) {
        auto m = z_equivalent(pts, rep);
        if (!m) throw std::logic_error("representative not equivalent to input");
        r.family = fam;
        r.representative = rep;
        r.witness = *m;
        r.vector = five_point_vector(rep);
    };

    if (width == 1) {
        if (sig == Signature{2, 2}) {
            finish(Family::W1_22, representative_22());
        } else if (sig == Signature{3, 1}) {
            finish(Family::W1_31, representative_31_width1());
        } else if (sig == Signature{3, 2}) {
            // negatives {-(a+b), -1}, positives {a, b, 1}
            std::vector<std::int64_t> pos;
            for (auto e : v.v)
                if (e > 0) pos.push_back(e);
            std::sort(pos.begin(), pos.end());
            pos.erase(pos.begin());
            const std::int64_t a = pos[0], b = pos[1];
            finish(Family::W1_32, representative_32(a, b));
            r.params = std::array<std::int64_t, 2>{a, b};
        } else if (sig == Signature{2, 1}) {
            r = classify_21(pts, v);
            r.size = 5;
        } else {
            throw std::logic_error("width-one configuration with unexpected signature");
        }
    } else {
        const auto key = v.sorted_abs();
        bool found = false;
        for (const auto& row : width_two_table()) {
            if (row.vector.sorted_abs() != key) continue;
            if (auto m = z_equivalent(pts, row.representative)) {
                r.family = row.family;
                r.representative = row.representative;
                r.witness = *m;
                r.vector = row.vector;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("size-5 configuration of width >= 2 matches no table row");
    }
    r.signature = sig;
    r.width = width;
    return r;
}

StructureForm structure_normalize(const PointConfiguration& cfg) {
    if (cfg.size() != 5 || cfg.dim() != 3) throw DomainError("need 5 points spanning dimension 3");
    if (!hull_has_size(cfg.points(), 5)) throw DomainError("hull has more than 5 lattice points");
    if (lattice_width(cfg).width < 2) throw DomainError("configuration has width one");
    const Signature sig = signature(five_point_vector(cfg));
    if (!(sig == Signature{3, 1}) && !(sig == Signature{4, 1})) throw DomainError("signature must be (3,1) or (4,1)");

    std::array<std::int64_t, 5> vol{};
    std::int64_t q = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        Tetra t;
        for (std::size_t j = 0, k = 0; j < 5; ++j)
            if (j != i) t[k++] = cfg[j];
        vol[i] = tetra_volume(t[0], t[1], t[2], t[3]);
        if (vol[i] > 0 && is_empty_tetra_bruteforce(t)) q = std::max(q, vol[i]);
        else vol[i] = 0;
    }
    for (std::size_t i = 0; i < 5; ++i) {
        if (vol[i] != q) continue;
        Tetra t;
        std::array<std::size_t, 4> idx{};
        for (std::size_t j = 0, k = 0; j < 5; ++j)
            if (j != i) idx[k++] = j;
        std::array<std::size_t, 4> perm = idx;
        do {
            for (std::size_t k = 0; k < 4; ++k) t[k] = cfg[perm[k]];
            for (std::int64_t p = 1; p <= q; ++p) {
                if (gcd(p, q) != 1) continue;
                auto m = forced_map(t, standard_tetra(p, q));
                if (!m) continue;
                const Point3 fifth = (*m)(cfg[i]);
                if (fifth.z != -1 && fifth.z != -2) continue;
                StructureForm s;
                for (std::size_t j = 0; j < 5; ++j) s.levels[j] = (*m)(cfg[j]).z;
                s.h = fifth.z;
                const Tetra std_t = standard_tetra(p, q);
                s.normalized = PointConfiguration({std_t[0], std_t[1], std_t[2], std_t[3], fifth});
                s.map = *m;
                s.p = p;
                s.q = q;
                s.omitted = i;
                return s;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw std::logic_error("no normalizing functional found");
}

namespace {

std::size_t table_index(const ClassRecord& r) {
    const auto& t = width_two_table();
    for (std::size_t i = 0; i < t.size(); ++i)
        if (r.vector && t[i].vector == *r.vector) return i;
    return t.size();
}

struct Found {
    std::string key;
    std::int64_t q;
    PointConfiguration cfg;
};

}  // namespace

std::vector<CensusClass> structured_census(const CensusOptions& opts) {
    std::vector<std::array<std::int64_t, 2>> tasks;
    for (std::int64_t q = 1; q <= opts.max_q; ++q)
        for (std::int64_t p = 1; p <= q; ++p)
            if (gcd(p, q) == 1) tasks.push_back({p, q});
    std::vector<std::vector<Found>> parts(tasks.size());
    parallel_for_parts(tasks.size(), opts.threads, [&](std::size_t t) {
        const auto [p, q] = tasks[t];
        const Tetra base = standard_tetra(p, q);
        std::map<std::string, PointConfiguration> local;
        for (std::int64_t h = -1; h >= -2; --h)
            for (std::int64_t a = -q - 2; a <= q + 2; ++a)
                for (std::int64_t b = -q - 2; b <= q + 2; ++b) {
                    const std::array<Point3, 5> pts{base[0], base[1], base[2], base[3], Point3{a, b, h}};
                    if (!hull_has_size(pts, 5)) continue;
                    const PointConfiguration cfg(std::vector<Point3>(pts.begin(), pts.end()));
                    if (lattice_width(cfg).width < 2) continue;
                    local.emplace(canonical_key(cfg), cfg);
                }
        for (auto& [k, c] : local) parts[t].push_back({k, q, c});
    });
    std::map<std::string, Found> merged;
    for (auto& part : parts)
        for (auto& f : part) merged.emplace(f.key, f);
    std::vector<CensusClass> out;
    for (auto& [k, f] : merged) out.push_back({k, classify_size5(f.cfg), f.q});
    std::stable_sort(out.begin(), out.end(), [](const CensusClass& x, const CensusClass& y) {
        std::size_t ix = table_index(x.record), iy = table_index(y.record);
        if (ix != iy) return ix < iy;
        return x.key < y.key;
    });
    return out;
}

std::vector<ClassRecord> enumerate_size5_width_ge2(const CensusOptions& opts) {
    std::vector<ClassRecord> out;
    for (auto& c : structured_census(opts)) out.push_back(c.record);
    return out;
}

namespace {

// Lattice data for the box sweep: points indexed lexicographically.
class BoxTables {
public:
    explicit BoxTables(std::int64_t box) : side_(box + 1), n_(static_cast<std::size_t>(side_ * side_ * side_)) {
        for (std::size_t i = 0; i < n_; ++i) pts_.push_back(point(i));
        pair_.assign(n_ * n_, {});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                const Point3 d = pts_[j] - pts_[i];
                const std::int64_t g = content(d);
                Extras& e = pair_[i * n_ + j];
                const Point3 step{d.x / g, d.y / g, d.z / g};
                for (std::int64_t k = 1; k < g; ++k) e.add(index(pts_[i] + k * step));
            }
        tri_.assign(n_ * n_ * n_, {});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = j + 1; k < n_; ++k) {
                    const Point3 tri[3] = {pts_[i], pts_[j], pts_[k]};
                    Extras& e = tri_[(i * n_ + j) * n_ + k];
                    for (const auto& p : Hull(tri).lattice_points()) {
                        std::size_t x = index(p);
                        if (x != i && x != j && x != k) e.add(x);
                    }
                }
    }

    struct Extras {
        std::uint8_t count = 0;
        std::array<std::uint8_t, 2> idx{};
        // count 3 means "three or more"
        void add(std::size_t x) {
            if (count < 2) idx[count] = static_cast<std::uint8_t>(x);
            if (count < 3) ++count;
        }
    };

    std::size_t size() const { return n_; }
    const Point3& pt(std::size_t i) const { return pts_[i]; }
    const Extras& pair(std::size_t i, std::size_t j) const { return pair_[std::min(i, j) * n_ + std::max(i, j)]; }
    const Extras& tri(std::size_t i, std::size_t j, std::size_t k) const {
        std::array<std::size_t, 3> s{i, j, k};
        std::sort(s.begin(), s.end());
        return tri_[(s[0] * n_ + s[1]) * n_ + s[2]];
    }

private:
    Point3 point(std::size_t i) const {
        const auto s = static_cast<std::size_t>(side_);
        return {static_cast<std::int64_t>(i / (s * s)), static_cast<std::int64_t>((i / s) % s),
                static_cast<std::int64_t>(i % s)};
    }
    std::size_t index(const Point3& p) const { return static_cast<std::size_t>((p.x * side_ + p.y) * side_ + p.z); }

    std::int64_t side_;
    std::size_t n_;
    std::vector<Point3> pts_;
    std::vector<Extras> pair_;
    std::vector<Extras> tri_;
};

class BoxSearch {
public:
    BoxSearch(const BoxTables& t, std::size_t part, const BoxVisitor& visit) : t_(t), part_(part), visit_(visit) {}

    void run(std::size_t first) {
        chosen_[0] = first;
        extend(1, {});
    }

private:
    using Pending = std::vector<std::size_t>;

    // Records the lattice points a new point j forces into the set; false
    // when one of them can no longer be added.
    bool absorb(const BoxTables::Extras& e, std::size_t j, std::size_t depth, Pending& pending) const {
        if (e.count > 2) return false;
        for (std::size_t s = 0; s < e.count; ++s) {
            const std::size_t x = e.idx[s];
            if (x == j || std::find(chosen_.begin(), chosen_.begin() + depth, x) != chosen_.begin() + depth) continue;
            if (x < j) return false;
            if (std::find(pending.begin(), pending.end(), x) == pending.end()) pending.push_back(x);
        }
        return true;
    }

    void extend(std::size_t depth, const Pending& pending) {
        if (depth == 5) {
            if (pending.empty()) finish();
            return;
        }
        std::size_t lo = chosen_[depth - 1] + 1, hi = t_.size();
        if (!pending.empty()) {
            lo = *std::min_element(pending.begin(), pending.end());
            hi = lo + 1;
        }
        for (std::size_t j = lo; j < hi; ++j) {
            Pending next;
            for (auto x : pending)
                if (x != j) next.push_back(x);
            bool ok = true;
            for (std::size_t a = 0; a < depth && ok; ++a) {
                ok = absorb(t_.pair(chosen_[a], j), j, depth, next);
                for (std::size_t b = a + 1; b < depth && ok; ++b) ok = absorb(t_.tri(chosen_[a], chosen_[b], j), j, depth, next);
            }
            if (!ok || depth + 1 + next.size() > 5) continue;
            chosen_[depth] = j;
            extend(depth + 1, next);
        }
    }

    void finish() {
        std::array<Point3, 5> pts;
        std::int64_t my = 0, mz = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            pts[i] = t_.pt(chosen_[i]);
            my = i ? std::min(my, pts[i].y) : pts[i].y;
            mz = i ? std::min(mz, pts[i].z) : pts[i].z;
        }
        if (my != 0 || mz != 0) return;
        if (affine_dimension(pts) != 3) return;
        if (!hull_has_size(pts, 5)) return;
        visit_(part_, pts);
    }

    const BoxTables& t_;
    std::size_t part_;
    const BoxVisitor& visit_;
    std::array<std::size_t, 5> chosen_{};
};

}  // namespace

std::size_t box_sweep_parts(const BoxSweepOptions& opts) {
    return static_cast<std::size_t>((opts.box + 1) * (opts.box + 1));
}

void box_sweep_size5(const BoxSweepOptions& opts, const BoxVisitor& visit) {
    if (opts.box < 1 || opts.box > 5) throw DomainError("box side must be in 1..5");
    const BoxTables tables(opts.box);
    // First (lexicographically smallest) point must have x = 0.
    parallel_for_parts(box_sweep_parts(opts), opts.threads, [&](std::size_t part) {
        BoxSearch search(tables, part, visit);
        search.run(part);
    });
}

std::vector<CandidateRow> enumerate_nonsymmetric41_candidates() {
    std::vector<CandidateRow> rows;
    // t = conv{(1,0), (a/2,b/2), (c/2,d/2)}, everything doubled.
    auto side = [](std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx,
                   std::int64_t cy) { return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax); };
    for (std::int64_t d = 1; d <= 8; ++d) {
        const std::int64_t c_hi = d == 1 ? 1 : d;
        for (std::int64_t c = 0; c < c_hi; ++c)
            for (std::int64_t b = -40; b <= -d; ++b)
                for (std::int64_t a = -60; a < 60; ++a) {
                    if (c * b - d * a <= 0) continue;
                    const std::int64_t vx[3] = {2, a, c}, vy[3] = {0, b, d};
                    auto classify_pt = [&](std::int64_t x, std::int64_t y) {
                        // returns 1 inside (closed), 2 strictly inside, 0 outside
                        std::int64_t s1 = side(vx[0], vy[0], vx[1], vy[1], x, y);
                        std::int64_t s2 = side(vx[1], vy[1], vx[2], vy[2], x, y);
                        std::int64_t s3 = side(vx[2], vy[2], vx[0], vy[0], x, y);
                        if ((s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0)) return 2;
                        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return 1;
                        return 0;
                    };
                    if (classify_pt(0, 0) != 2) continue;
                    bool clean = true;
                    const std::int64_t xlo = floor_div(std::min({vx[0], vx[1], vx[2]}), 2);
                    const std::int64_t xhi = ceil_div(std::max({vx[0], vx[1], vx[2]}), 2);
                    const std::int64_t ylo = floor_div(std::min({vy[0], vy[1], vy[2]}), 2);
                    const std::int64_t yhi = ceil_div(std::max({vy[0], vy[1], vy[2]}), 2);
                    for (std::int64_t x = xlo; x <= xhi && clean; ++x)
                        for (std::int64_t y = ylo; y <= yhi && clean; ++y) {
                            if ((x == 0 || x == 1) && y == 0) continue;
                            if (classify_pt(2 * x, 2 * y) != 0) clean = false;
                        }
                    if (!clean) continue;
                    CandidateRow r{c, d, a, b, c - a, d - b, false, std::nullopt, std::nullopt};
                    r.survives = gcd(r.p, r.q) == 1 && r.p <= r.q;
                    if (r.survives) {
                        const std::int64_t p = r.p, q = r.q;
                        r.formula_vector = std::array<std::int64_t, 5>{(a - 2) * q - b * p, p * b - q * a, q + b, -b, q};
                        const Tetra t = standard_tetra(p, q);
                        r.computed_vector = five_point_vector({t[0], t[1], t[2], t[3], Point3{a, b, -1}});
                    }
                    rows.push_back(r);
                }
    }
    return rows;
}

PointConfiguration symmetric41_configuration(std::int64_t p, std::int64_t q) {
    return {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {p, q, 1}, {-p - 1, -q, -2}};
}

Symmetric41Result enumerate_symmetric41(std::int64_t max_q) {
    Symmetric41Result res;
    std::map<std::string, PointConfiguration> classes;
    for (std::int64_t q = 1; q <= max_q; ++q)
        for (std::int64_t p = 1; p <= q; ++p) {
            if (gcd(p, q) != 1) continue;
            const PointConfiguration c = symmetric41_configuration(p, q);
            // T1 = {p1,p2,p3,p5}, T2 = {p1,p2,p4,p5}, T3 = {p1,p3,p4,p5}
            const std::array<std::array<std::size_t, 3>, 3> facets{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
            bool ok = true;
            for (const auto& f : facets) {
                auto abq = standard_apex_coordinates(c[f[0]], c[f[1]], c[f[2]], c[4]);
                if (!abq || !lemma_a_predicate((*abq)[0], (*abq)[1], (*abq)[2])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            res.survivors.push_back({p, q});
            if (lattice_points_in_hull(c).size() == 5) classes.emplace(canonical_key(c), c);
        }
    for (const auto& [k, c] : classes) res.records.push_back(classify_size5(c));
    std::sort(res.records.begin(), res.records.end(),
              [](const ClassRecord& x, const ClassRecord& y) { return table_index(x) < table_index(y); });
    res.p2_to_p3 = z_equivalent(symmetric41_configuration(2, 5), symmetric41_configuration(3, 5));
    return res;
}

}  // namespace latpoly
