#include <doctest.h>

#include <json.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latpoly/cli.hpp"
#include "latpoly/io.hpp"
#include "support.hpp"

using namespace latpoly;
using namespace testsupport;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kW231 = "0 0 0\n1 0 0\n0 1 0\n-1 -1 0\n1 2 3\n";

}  // namespace

TEST_CASE("text and JSON parsing") {
    auto d = parse_document("# label: sample\n0 0 0 # origin\n\n1 0 0\n  0 1 0\n");
    CHECK(d.label == std::optional<std::string>("sample"));
    CHECK(d.points == std::vector<Point3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    auto j = parse_document(R"({"label": "x", "points": [[1, 2, 3], [-4, 5, 6]]})");
    CHECK(j.label == std::optional<std::string>("x"));
    CHECK(j.points == std::vector<Point3>{{1, 2, 3}, {-4, 5, 6}});
    CHECK_THROWS_AS(parse_document("1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_document("1 2 3.5\n"), ParseError);
    CHECK_THROWS_AS(parse_document("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[1, 2]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"points": [[1, 2, 0.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_document("{ bad json"), ParseError);
}

TEST_CASE("documents round-trip") {
    for (int it = 0; it < 300; ++it) {
        PolytopeDocument doc;
        doc.points = random_points(static_cast<std::size_t>(uniform(1, 9)), -1000000, 1000000);
        if (uniform(0, 1)) doc.label = "poly-" + std::to_string(uniform(0, 99999)) + " #" + std::to_string(it);
        CHECK(parse_document(render_text(doc)) == doc);
        CHECK(parse_document(render_json(doc)) == doc);
    }
}

TEST_CASE("invariants command") {
    auto r = run({"invariants", "-"}, kW231);
    CHECK(r.code == 0);
    CHECK(r.out.find("width: 2") != std::string::npos);
    CHECK(r.out.find("five-point vector: (-9,3,3,3,0)") != std::string::npos);
    auto u = run({"invariants", "--json", "-"}, "0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
    auto j = nlohmann::json::parse(u.out);
    CHECK(j["size"] == 4);
    CHECK(j["width"] == 1);
    auto six = run({"invariants", "--json", "-"}, "0 0 0\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n2 1 0\n");
    CHECK(six.code == 0);
    CHECK_FALSE(nlohmann::json::parse(six.out).contains("five_point_vector"));
    CHECK(run({"invariants", "-"}, "1 1 1\n").code == 3);
    CHECK(run({"invariants", "-"}, "1 1\n").code == 2);
}

TEST_CASE("classify command") {
    auto a = run({"classify", "-"}, "0 0 0\n1 0 0\n0 0 1\n-1 0 0\n7 3 1\n");
    CHECK(a.code == 0);
    CHECK(a.out.find("family: W1-(2,1)[1,3]") != std::string::npos);
    auto b = run({"classify", "--json", "-"}, "0 0 0\n1 0 0\n0 0 1\n1 3 1\n-1 -2 -1\n");
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["family"] == "W2-(4,1)");
    CHECK(j["volume_vector"] == nlohmann::json::array({-7, 1, 1, 2, 3}));
    auto c = run({"classify", "-"}, "0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n");
    CHECK(c.out.find("family: W1-(2,2)") != std::string::npos);
    CHECK(run({"classify", "-"}, "0 0 0\n1 0 0\n").code == 3);
}

TEST_CASE("equiv command") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "latpoly_equiv_a.txt").string();
    const auto b = (dir / "latpoly_equiv_b.txt").string();
    const auto c = (dir / "latpoly_equiv_c.txt").string();
    std::ofstream(a) << "0 0 0\n1 0 0\n0 0 1\n2 5 1\n-3 -5 -2\n";
    std::ofstream(b) << "0 0 0\n1 0 0\n0 0 1\n3 5 1\n-4 -5 -2\n";
    std::ofstream(c) << "0 0 0\n1 0 0\n0 0 1\n1 5 1\n";
    auto yes = run({"equiv", "--json", a, b});
    CHECK(yes.code == 0);
    auto j = nlohmann::json::parse(yes.out);
    CHECK(j["equivalent"] == true);
    CHECK(j["witness"]["linear"] == nlohmann::json::parse("[[1,-1,3],[0,-1,5],[0,0,1]]"));
    auto no = run({"equiv", a, c});
    CHECK(no.code == 1);
    CHECK(no.out == "not equivalent\n");
    CHECK(run({"equiv", a, (dir / "latpoly_missing.txt").string()}).code == 2);
}

TEST_CASE("empty-tetra, width, minimality and polygons commands") {
    auto e = run({"empty-tetra", "--json", "-"}, "0 0 0\n1 0 0\n0 0 1\n3 7 1\n");
    auto j = nlohmann::json::parse(e.out);
    CHECK(j["p"] == 2);
    CHECK(j["q"] == 7);
    CHECK(j["automorphisms"] == 2);
    CHECK(run({"empty-tetra", "-"}, "0 0 0\n1 0 0\n0 1 0\n2 2 4\n").code == 1);
    auto w = run({"width", "-"}, "0 0 0\n1 0 0\n0 0 1\n2 5 1\n-3 -5 -2\n");
    CHECK(w.out.find("width: 2") != std::string::npos);
    auto m = run({"minimality", "--json", "-"}, "1 0 0\n-1 0 0\n0 -1 12\n0 1 12\n");
    auto mj = nlohmann::json::parse(m.out);
    CHECK(mj["verdict"] == "minimal");
    CHECK(mj["projection"]["projected_verdict"] == "minimal");
    auto p = run({"polygons", "--json"});
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj[2]["count"] == 6);
}

TEST_CASE("atlas command") {
    auto a = run({"atlas", "--size", "5"});
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["size"] == 5);
    std::size_t w2 = 0, w1 = 0;
    for (const auto& r : j["records"]) (r["width"] == 2 ? w2 : w1)++;
    CHECK(w2 == 9);
    CHECK(w1 == 4);
    CHECK(run({"atlas", "--size", "5", "--threads", "3"}).out == a.out);
    CHECK(run({"atlas", "--size", "5"}).out == a.out);
    CHECK(run({"atlas", "--size", "5", "--widths-only"}).out == "max width 2\n");
    auto four = nlohmann::json::parse(run({"atlas", "--size", "4"}).out);
    CHECK(four["records"].size() == 1);
    CHECK(four["records"][0]["family"] == "T(p,q)");
    CHECK(run({"atlas", "--size", "7"}).code == 3);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--version"}).code == 0);
}
