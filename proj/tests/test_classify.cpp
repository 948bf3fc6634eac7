#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "latpoly/classify.hpp"
#include "latpoly/empty_tetra.hpp"
#include "latpoly/equivalence.hpp"
#include "latpoly/minimality.hpp"
#include "latpoly/polygon.hpp"
#include "latpoly/width.hpp"
#include "support.hpp"

using namespace latpoly;
using namespace testsupport;

namespace {

bool witness_valid(const ClassRecord& r, const PointConfiguration& input) {
    return r.witness && as_set(image(*r.witness, lattice_points_in_hull(input))) == as_set(r.representative.points());
}

std::vector<PointConfiguration> width_one_samples() {
    std::vector<PointConfiguration> out{representative_22(), representative_31_width1()};
    for (std::int64_t q = 1; q <= 7; ++q)
        for (std::int64_t p = 0; 2 * p <= q; ++p)
            if (gcd(p, q) == 1) out.push_back(representative_21(p, q));
    for (std::int64_t b = 1; b <= 6; ++b)
        for (std::int64_t a = 1; a <= b; ++a)
            if (gcd(a, b) == 1) out.push_back(representative_32(a, b));
    return out;
}

}  // namespace

TEST_CASE("table representatives classify to their own rows") {
    for (const auto& row : width_two_table()) {
        const auto r = classify_size5(row.representative);
        CHECK(r.family == row.family);
        CHECK(r.vector == row.vector);
        CHECK(r.width == 2);
        CHECK(five_point_vector(row.representative) == row.vector);
        REQUIRE(r.witness);
        CHECK(as_set(image(*r.witness, row.representative.points())) == as_set(row.representative.points()));
    }
}

TEST_CASE("classification examples") {
    auto a = classify_size5(PointConfiguration({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}, {7, 3, 1}}));
    CHECK(a.family == Family::W1_21);
    CHECK(a.params == std::array<std::int64_t, 2>{1, 3});
    auto b = classify_size5(PointConfiguration({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 3, 1}, {-1, -2, -1}}));
    CHECK(b.family == Family::W2_41);
    CHECK(b.vector->v == std::array<std::int64_t, 5>{-7, 1, 1, 2, 3});
    CHECK(classify_size5(representative_22()).family == Family::W1_22);
    auto u = classify_size5(PointConfiguration({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(u.family == Family::Unsized5);
    CHECK(u.size == 4);
    // five lattice points although only four are given
    CHECK(classify_size5(PointConfiguration({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}})).family == Family::W1_21);
    auto big = classify_size5(PointConfiguration({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(big.family == Family::Unsized5);
    CHECK(big.size == 10);
    CHECK_THROWS_AS(classify_size5(PointConfiguration({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})), DomainError);
}

TEST_CASE("round trip through random unimodular images") {
    std::vector<PointConfiguration> reps;
    for (const auto& row : width_two_table()) reps.push_back(row.representative);
    for (const auto& c : width_one_samples()) reps.push_back(c);
    for (const auto& rep : reps) {
        const auto base = classify_size5(rep);
        for (int it = 0; it < 200; ++it) {
            auto pts = image(random_unimodular(), rep.points());
            std::shuffle(pts.begin(), pts.end(), rng());
            const PointConfiguration input(pts);
            const auto r = classify_size5(input);
            CHECK(record_label(r) == record_label(base));
            CHECK(witness_valid(r, input));
        }
    }
}

TEST_CASE("width-one parameters are normalized") {
    for (const auto& c : width_one_samples()) {
        const auto r = classify_size5(c);
        CHECK(r.width == 1);
        if (r.family == Family::W1_21) {
            const auto [p, q] = *r.params;
            CHECK((0 <= p && 2 * p <= q && gcd(p, q) == 1));
        }
        if (r.family == Family::W1_32) {
            const auto [a, b] = *r.params;
            CHECK((0 < a && a <= b && gcd(a, b) == 1));
        }
    }
}

TEST_CASE("irredundancy of the table") {
    std::set<std::string> labels, keys;
    for (const auto& row : width_two_table()) {
        labels.insert(record_label(classify_size5(row.representative)));
        keys.insert(canonical_key(row.representative));
    }
    for (const auto& c : width_one_samples()) {
        labels.insert(record_label(classify_size5(c)));
        keys.insert(canonical_key(c));
    }
    CHECK(labels.size() == keys.size());
    CHECK(labels.size() == width_two_table().size() + width_one_samples().size());
}

TEST_CASE("structure normal form") {
    const auto& t = width_two_table();
    auto s41 = structure_normalize(t[1].representative);
    CHECK(s41.h == -2);
    CHECK(structure_normalize(t[0].representative).h == -1);
    CHECK(structure_normalize(t[2].representative).h == -1);
    for (const auto& row : t) {
        const auto s = structure_normalize(row.representative);
        const Tetra st = standard_tetra(s.p, s.q);
        for (std::size_t i = 0; i < 4; ++i) CHECK(s.normalized[i] == st[i]);
        CHECK(s.normalized[4].z == s.h);
        CHECK(as_set(image(s.map, row.representative.points())) == as_set(s.normalized.points()));
        std::vector<std::int64_t> lv(s.levels.begin(), s.levels.end());
        std::sort(lv.begin(), lv.end());
        CHECK(lv == std::vector<std::int64_t>{s.h, 0, 0, 1, 1});
        // maximal empty subtetrahedron
        for (std::size_t i = 0; i < 5; ++i) {
            Tetra sub;
            for (std::size_t j = 0, k = 0; j < 5; ++j)
                if (j != i) sub[k++] = row.representative[j];
            const auto v = tetra_volume(sub[0], sub[1], sub[2], sub[3]);
            if (v > 0 && is_empty_tetra_bruteforce(sub)) CHECK(v <= s.q);
        }
    }
    CHECK_THROWS_AS(structure_normalize(representative_22()), DomainError);
}

TEST_CASE("structured census") {
    const auto census = structured_census();
    REQUIRE(census.size() == 9);
    std::map<std::pair<int, int>, int> hist;
    for (std::size_t i = 0; i < census.size(); ++i) {
        const auto& r = census[i].record;
        CHECK(r.vector == width_two_table()[i].vector);
        CHECK(r.width == 2);
        ++hist[{r.signature->pos, r.signature->neg}];
        CHECK(census[i].first_q <= 7);
        CHECK(is_dps(r.representative));
        CHECK(minimality_report(r.representative).verdict == Verdict::Minimal);
    }
    CHECK(hist[{4, 1}] == 8);
    CHECK(hist[{3, 1}] == 1);
    // deterministic regardless of thread count
    const auto again = structured_census({12, 3});
    REQUIRE(again.size() == census.size());
    for (std::size_t i = 0; i < census.size(); ++i) CHECK(again[i].key == census[i].key);
}

TEST_CASE("nonsymmetric (4,1) candidate table") {
    const auto rows = enumerate_nonsymmetric41_candidates();
    CHECK(rows.size() == 16);
    std::multiset<std::pair<std::int64_t, std::int64_t>> surv;
    for (const auto& r : rows) {
        if (!r.survives) continue;
        surv.insert({r.p, r.q});
        REQUIRE(r.formula_vector);
        CHECK(*r.formula_vector == r.computed_vector->v);
    }
    CHECK(surv == std::multiset<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, 3}, {3, 5}, {3, 5}, {5, 7}, {4, 7}});
}

TEST_CASE("symmetric (4,1) sweep") {
    const auto res = enumerate_symmetric41();
    std::set<std::int64_t> qs;
    for (const auto& s : res.survivors) qs.insert(s[1]);
    CHECK(qs == std::set<std::int64_t>{1, 5});
    REQUIRE(res.records.size() == 2);
    CHECK(res.records[0].vector->v == std::array<std::int64_t, 5>{-4, 1, 1, 1, 1});
    CHECK(res.records[1].vector->v == std::array<std::int64_t, 5>{-20, 5, 5, 5, 5});
    CHECK(width_of(symmetric41_configuration(1, 1), {1, 0, -1, 0}) == 2);
    CHECK(width_of(symmetric41_configuration(2, 5), {1, 0, -1, 0}) == 2);
    for (const auto& r : res.records) CHECK(r.width == 2);
    REQUIRE(res.p2_to_p3);
    Matrix3 want;
    want.a = {{{1, -1, 3}, {0, -1, 5}, {0, 0, 1}}};
    CHECK(res.p2_to_p3->linear() == want);
}

TEST_CASE("polygon census") {
    const auto g = enumerate_polygons_upto5();
    CHECK(g[3].size() == 1);
    CHECK(g[4].size() == 3);
    CHECK(g[5].size() == 6);
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto box = polygons_in_box(n);
        REQUIRE(box.size() == g[n].size());
        for (std::size_t i = 0; i < box.size(); ++i) CHECK(box[i].key == g[n][i].key);
    }
    // a wider search radius adds nothing
    const auto wide = grow_polygons(6, 9);
    const auto narrow = grow_polygons(6);
    for (std::size_t n = 3; n <= 6; ++n) CHECK(wide[n].size() == narrow[n].size());
}

TEST_CASE("box sweep on a small box") {
    // [0,2]^3 already contains representatives of several classes
    std::mutex mu;
    std::set<std::string> keys;
    std::size_t count = 0;
    box_sweep_size5({2, 2}, [&](std::size_t, const std::array<Point3, 5>& pts) {
        const PointConfiguration c(std::vector<Point3>(pts.begin(), pts.end()));
        const auto k = canonical_key(c);
        std::lock_guard lock(mu);
        ++count;
        keys.insert(k);
    });
    // every 5-subset of the box that passes the filters, by direct enumeration
    std::vector<Point3> grid;
    for (std::int64_t x = 0; x <= 2; ++x)
        for (std::int64_t y = 0; y <= 2; ++y)
            for (std::int64_t z = 0; z <= 2; ++z) grid.push_back({x, y, z});
    std::size_t direct = 0;
    std::set<std::string> direct_keys;
    std::array<std::size_t, 5> i{};
    for (i[0] = 0; i[0] < grid.size(); ++i[0])
        for (i[1] = i[0] + 1; i[1] < grid.size(); ++i[1])
            for (i[2] = i[1] + 1; i[2] < grid.size(); ++i[2])
                for (i[3] = i[2] + 1; i[3] < grid.size(); ++i[3])
                    for (i[4] = i[3] + 1; i[4] < grid.size(); ++i[4]) {
                        std::vector<Point3> pts;
                        for (auto k : i) pts.push_back(grid[k]);
                        std::int64_t mx = 9, my = 9, mz = 9;
                        for (const auto& p : pts) {
                            mx = std::min(mx, p.x);
                            my = std::min(my, p.y);
                            mz = std::min(mz, p.z);
                        }
                        if (mx || my || mz || affine_dimension(pts) != 3) continue;
                        if (lattice_points_in_hull(std::span<const Point3>(pts)).size() != 5) continue;
                        ++direct;
                        direct_keys.insert(canonical_key(PointConfiguration(pts)));
                    }
    CHECK(count == direct);
    CHECK(keys == direct_keys);
}
