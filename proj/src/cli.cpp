#include "latpoly/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "latpoly/classify.hpp"
#include "latpoly/empty_tetra.hpp"
#include "latpoly/equivalence.hpp"
#include "latpoly/invariants.hpp"
#include "latpoly/io.hpp"
#include "latpoly/minimality.hpp"
#include "latpoly/polygon.hpp"
#include "latpoly/width.hpp"

namespace latpoly {

using Json = nlohmann::ordered_json;

namespace {

struct Input {
    std::istream& in;
    PolytopeDocument read(const std::string& path) const {
        std::stringstream buf;
        if (path == "-") {
            buf << in.rdbuf();
        } else {
            std::ifstream f(path);
            if (!f) throw ParseError("cannot open " + path);
            buf << f.rdbuf();
        }
        return parse_document(buf.str());
    }
};

Json point_json(const Point3& p) { return Json::array({p.x, p.y, p.z}); }

Json points_json(std::span<const Point3> pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

Json matrix_json(const Matrix3& m) {
    Json a = Json::array();
    for (const auto& r : m.a) a.push_back(Json::array({r[0], r[1], r[2]}));
    return a;
}

Json map_json(const UnimodularAffineMap& m) {
    return Json{{"linear", matrix_json(m.linear())}, {"translation", point_json(m.translation())}};
}

Json functional_json(const IntegerFunctional& f) { return Json::array({f.a, f.b, f.c, f.k}); }

Json vector_json(const std::array<std::int64_t, 5>& v) { return Json::array({v[0], v[1], v[2], v[3], v[4]}); }

std::string join(std::span<const Point3> pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i];
    return os.str();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_invariants(const PolytopeDocument& doc, bool json, std::ostream& out) {
    const PointConfiguration cfg(doc.points);
    if (cfg.dim() < 1) throw DomainError("configuration is a single point");
    const PointConfiguration lp(lattice_points_in_hull(cfg));
    const WidthResult w = lattice_width(cfg);
    Json j;
    if (doc.label) j["label"] = *doc.label;
    j["points"] = cfg.size();
    j["size"] = lp.size();
    j["dimension"] = cfg.dim();
    if (cfg.dim() == 3) {
        j["normalized_volume"] = normalized_volume(cfg);
        if (cfg.size() <= 8) j["volume_vector"] = volume_vector(cfg).entries;
    }
    if (cfg.size() == 5 && cfg.dim() == 3) {
        const FivePointVector v = five_point_vector(cfg);
        const Signature s = signature(v);
        j["five_point_vector"] = vector_json(v.v);
        j["signature"] = Json::array({s.pos, s.neg});
    }
    j["width"] = w.width;
    j["width_functional"] = functional_json(w.witness);
    j["dps"] = is_dps(lp);
    if (json) {
        print_json(out, j);
        return kOk;
    }
    if (doc.label) out << "label: " << *doc.label << '\n';
    out << "points: " << cfg.size() << "\nsize: " << lp.size() << "\ndimension: " << cfg.dim() << '\n';
    if (j.contains("normalized_volume")) out << "normalized volume: " << j["normalized_volume"].get<std::int64_t>() << '\n';
    if (j.contains("volume_vector")) {
        out << "volume vector:";
        for (auto e : volume_vector(cfg).entries) out << ' ' << e;
        out << '\n';
    }
    if (j.contains("five_point_vector")) {
        const FivePointVector v = five_point_vector(cfg);
        out << "five-point vector: " << v << "\nsignature: " << signature(v) << '\n';
    }
    out << "width: " << w.width << " (" << w.witness << ")\n";
    out << "dps: " << (is_dps(lp) ? "yes" : "no") << '\n';
    return kOk;
}

Json record_json(const ClassRecord& r) {
    Json j;
    j["family"] = family_name(r.family);
    j["label"] = record_label(r);
    j["size"] = r.size;
    if (r.params) j["parameters"] = Json::array({(*r.params)[0], (*r.params)[1]});
    if (r.signature) j["signature"] = Json::array({r.signature->pos, r.signature->neg});
    j["width"] = r.width;
    if (r.vector) j["volume_vector"] = vector_json(r.vector->v);
    j["representative"] = points_json(r.representative.points());
    if (r.witness) j["witness"] = map_json(*r.witness);
    return j;
}

int cmd_classify(const PolytopeDocument& doc, bool json, std::ostream& out) {
    const ClassRecord r = classify_size5(PointConfiguration(doc.points));
    if (json) {
        print_json(out, record_json(r));
        return kOk;
    }
    out << "family: " << record_label(r) << '\n';
    if (r.family == Family::Unsized5) {
        out << "size: " << r.size << '\n';
        return kOk;
    }
    out << "signature: " << *r.signature << "\nwidth: " << r.width << "\nvolume vector: " << *r.vector << '\n';
    out << "representative: " << join(r.representative.points()) << '\n';
    out << "witness: " << *r.witness << '\n';
    return kOk;
}

int cmd_equiv(const PolytopeDocument& a, const PolytopeDocument& b, bool json, std::ostream& out) {
    const auto m = z_equivalent(PointConfiguration(a.points), PointConfiguration(b.points));
    if (json) {
        Json j{{"equivalent", m.has_value()}};
        if (m) j["witness"] = map_json(*m);
        print_json(out, j);
    } else if (m) {
        out << "equivalent\nlinear: " << m->linear() << "\ntranslation: " << m->translation() << '\n';
    } else {
        out << "not equivalent\n";
    }
    return m ? kOk : kNegative;
}

int cmd_empty_tetra(const PolytopeDocument& doc, bool json, std::ostream& out) {
    if (doc.points.size() != 4) throw DomainError("empty-tetra needs exactly 4 points");
    Tetra t;
    std::copy(doc.points.begin(), doc.points.end(), t.begin());
    if (affine_dimension(t) != 3) throw DomainError("points are coplanar");
    const bool empty = is_empty_tetra_bruteforce(t);
    Json j{{"empty", empty}, {"volume", tetra_volume(t[0], t[1], t[2], t[3])}};
    if (empty) {
        const EmptyTetraClass c = classify_empty(t);
        j["p"] = c.cls.p;
        j["q"] = c.cls.q;
        j["width"] = lattice_width(PointConfiguration(doc.points)).width;
        j["witness"] = map_json(c.witness);
        j["automorphisms"] = unimodular_automorphisms(t).size();
    }
    if (json) {
        print_json(out, j);
    } else if (empty) {
        out << "empty: yes\nclass: T(" << j["p"].get<std::int64_t>() << ',' << j["q"].get<std::int64_t>()
            << ")\nwidth: " << j["width"].get<std::int64_t>() << "\nautomorphisms: " << j["automorphisms"].get<std::size_t>()
            << "\nwitness: " << classify_empty(t).witness << '\n';
    } else {
        out << "empty: no\n";
    }
    return empty ? kOk : kNegative;
}

int cmd_width(const PolytopeDocument& doc, bool json, std::ostream& out) {
    const PointConfiguration cfg(doc.points);
    if (cfg.dim() < 1) throw DomainError("configuration is a single point");
    const WidthResult w = lattice_width(cfg);
    if (json) {
        print_json(out, Json{{"width", w.width},
                             {"functional", functional_json(w.witness)},
                             {"certificate_bound", w.certificate_bound}});
    } else {
        out << "width: " << w.width << "\nfunctional: " << w.witness << "\ncertificate bound: " << w.certificate_bound
            << '\n';
    }
    return kOk;
}

int cmd_minimality(const PolytopeDocument& doc, bool json, std::ostream& out) {
    const PointConfiguration cfg(doc.points);
    const MinimalityReport r = minimality_report(cfg);
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["dimension"] = r.dim;
    j["size"] = r.size;
    j["width"] = r.width;
    j["vertices"] = points_json(r.vertices);
    j["vert_star"] = points_json(r.vert_star);
    Json del = Json::array();
    for (const auto& d : r.deleted) {
        Json e{{"vertex", point_json(d.vertex)}, {"dimension", d.dim}, {"width", d.width}};
        if (d.witness) e["functional"] = functional_json(*d.witness);
        del.push_back(e);
    }
    j["deleted"] = del;
    std::optional<ProjectionReport> pr;
    if (r.dim == 3 && (r.verdict == Verdict::Minimal || r.verdict == Verdict::QuasiMinimal)) {
        pr = projection_dichotomy_check(cfg);
        Json p{{"small_case", pr->small_case}};
        if (!pr->small_case) {
            p["projection_found"] = pr->projection_found;
            if (pr->projection_found) {
                p["direction"] = point_json(pr->direction);
                Json poly = Json::array();
                for (const auto& q : pr->projected) poly.push_back(Json::array({q.x, q.y}));
                p["projected"] = poly;
                p["unique_preimages"] = pr->unique_preimages;
                p["vert_star_bijects"] = pr->vert_star_bijects;
                p["projected_verdict"] = verdict_name(pr->projected_verdict);
            }
        }
        j["projection"] = p;
    }
    if (json) {
        print_json(out, j);
        return kOk;
    }
    out << "verdict: " << verdict_name(r.verdict) << "\nsize: " << r.size << "\nwidth: " << r.width << '\n';
    out << "vertices: " << join(r.vertices) << "\nvert*: " << join(r.vert_star) << '\n';
    for (const auto& d : r.deleted) {
        out << "  delete " << d.vertex << ": dim " << d.dim << ", width " << d.width;
        if (d.witness) out << " (" << *d.witness << ")";
        out << '\n';
    }
    if (pr) {
        if (pr->small_case) {
            out << "projection: at most 11 lattice points\n";
        } else if (pr->projection_found) {
            out << "projection: along " << pr->direction << " onto";
            for (const auto& q : pr->projected) out << ' ' << q;
            out << "\n  unique preimages: " << (pr->unique_preimages ? "yes" : "no")
                << "\n  projected verdict: " << verdict_name(pr->projected_verdict) << '\n';
        } else {
            out << "projection: none found\n";
        }
    }
    return kOk;
}

int cmd_polygons(std::size_t max_size, bool json, std::ostream& out) {
    if (max_size < 3 || max_size > 8) throw DomainError("max size must be in 3..8");
    const auto classes = grow_polygons(max_size);
    Json j = Json::array();
    for (std::size_t n = 3; n <= max_size; ++n) {
        Json cls = Json::array();
        for (const auto& c : classes[n]) {
            Json pts = Json::array();
            for (const auto& p : c.points) pts.push_back(Json::array({p.x, p.y}));
            const auto v = classify_2d_minimality(c.points);
            cls.push_back(Json{{"points", pts}, {"minimality", verdict_name(v)}});
        }
        j.push_back(Json{{"size", n}, {"count", classes[n].size()}, {"classes", cls}});
    }
    if (json) {
        print_json(out, j);
        return kOk;
    }
    for (const auto& s : j) {
        out << "size " << s["size"].get<std::size_t>() << ": " << s["count"].get<std::size_t>() << " classes\n";
        for (const auto& c : s["classes"]) {
            out << " ";
            for (const auto& p : c["points"]) out << " (" << p[0].get<std::int64_t>() << ',' << p[1].get<std::int64_t>() << ')';
            out << "  [" << c["minimality"].get<std::string>() << "]\n";
        }
    }
    return kOk;
}

Json symbolic_points(std::initializer_list<std::array<Json, 3>> pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(Json::array({p[0], p[1], p[2]}));
    return a;
}

Json width_one_stanzas() {
    Json a = Json::array();
    a.push_back(Json{{"family", "W1-(2,2)"},
                     {"signature", Json::array({2, 2})},
                     {"width", 1},
                     {"volume_vector", Json::array({-1, 1, 1, -1, 0})},
                     {"representative", points_json(representative_22().points())}});
    a.push_back(Json{{"family", "W1-(2,1)"},
                     {"signature", Json::array({2, 1})},
                     {"width", 1},
                     {"volume_vector", Json::array({"-2q", "q", "0", "q", "0"})},
                     {"representative", symbolic_points({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}, {"p", "q", 1}})},
                     {"parameters", "0 <= p <= q/2, gcd(p,q) = 1"}});
    a.push_back(Json{{"family", "W1-(3,2)"},
                     {"signature", Json::array({3, 2})},
                     {"width", 1},
                     {"volume_vector", Json::array({"-a-b", "a", "b", "1", "-1"})},
                     {"representative", symbolic_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {"a", "b", 1}})},
                     {"parameters", "0 < a <= b, gcd(a,b) = 1"}});
    a.push_back(Json{{"family", "W1-(3,1)"},
                     {"signature", Json::array({3, 1})},
                     {"width", 1},
                     {"volume_vector", Json::array({-3, 1, 1, 1, 0})},
                     {"representative", points_json(representative_31_width1().points())}});
    return a;
}

}  // namespace

std::string atlas_json(int size, unsigned threads) {
    Json j;
    j["generator"] = "latpoly";
    j["version"] = kVersion;
    j["size"] = size;
    Json recs = Json::array();
    if (size == 5) {
        for (const auto& c : structured_census({12, threads})) {
            const ClassRecord& r = c.record;
            recs.push_back(Json{{"family", family_name(r.family)},
                                {"signature", Json::array({r.signature->pos, r.signature->neg})},
                                {"width", r.width},
                                {"volume_vector", vector_json(r.vector->v)},
                                {"representative", points_json(r.representative.points())}});
        }
        for (auto& s : width_one_stanzas()) recs.push_back(s);
    } else if (size == 4) {
        recs.push_back(Json{{"family", "T(p,q)"},
                            {"width", 1},
                            {"normalized_volume", "q"},
                            {"representative", symbolic_points({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {"p", "q", 1}})},
                            {"parameters", "q >= 1, 0 <= p <= q, gcd(p,q) = 1"},
                            {"equivalence", "T(p,q) ~ T(p',q) iff p' = +-p^(+-1) mod q"}});
    } else {
        throw DomainError("atlas supports --size 4 or 5");
    }
    j["records"] = recs;
    return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice 3-polytopes of small size"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    bool json = false;
    unsigned threads = 1;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--threads", threads, "Worker threads for enumerations")->check(CLI::Range(1u, 256u));

    std::string file_a, file_b;
    auto file_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("input", file_a, "Input file, '-' for stdin")->required();
        c->add_flag("--json", json, "Machine-readable output");
        return c;
    };
    auto* inv = file_cmd("invariants", "Size, volumes, five-point vector, signature, width, dps");
    auto* cls = file_cmd("classify", "Classify a configuration of size 5");
    auto* et = file_cmd("empty-tetra", "Test emptiness and find the T(p,q) class");
    auto* wid = file_cmd("width", "Lattice width with a witness functional");
    auto* mini = file_cmd("minimality", "Vertex deletion, Vert* and the projection check");
    auto* eq = app.add_subcommand("equiv", "Unimodular equivalence of two configurations");
    eq->add_option("a", file_a, "First input")->required();
    eq->add_option("b", file_b, "Second input")->required();
    eq->add_flag("--json", json, "Machine-readable output");
    int atlas_size = 5;
    bool widths_only = false;
    auto* atlas = app.add_subcommand("atlas", "Classification atlas as JSON");
    atlas->add_option("--size", atlas_size, "Number of lattice points (4 or 5)");
    atlas->add_flag("--widths-only", widths_only, "Print only the maximal width");
    atlas->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    std::size_t max_size = 5;
    auto* poly = app.add_subcommand("polygons", "Lattice polygons with few lattice points");
    poly->add_option("--max-size", max_size, "Largest size listed (3..8)");
    poly->add_flag("--json", json, "Machine-readable output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    const Input input{in};
    try {
        if (inv->parsed()) return cmd_invariants(input.read(file_a), json, out);
        if (cls->parsed()) return cmd_classify(input.read(file_a), json, out);
        if (et->parsed()) return cmd_empty_tetra(input.read(file_a), json, out);
        if (wid->parsed()) return cmd_width(input.read(file_a), json, out);
        if (mini->parsed()) return cmd_minimality(input.read(file_a), json, out);
        if (eq->parsed()) return cmd_equiv(input.read(file_a), input.read(file_b), json, out);
        if (poly->parsed()) return cmd_polygons(max_size, json, out);
        if (atlas->parsed()) {
            if (widths_only) {
                if (atlas_size != 5) throw DomainError("--widths-only needs --size 5");
                std::int64_t w = 0;
                for (const auto& r : enumerate_size5_width_ge2({12, threads})) w = std::max(w, r.width);
                out << "max width " << w << '\n';
                return kOk;
            }
            out << atlas_json(atlas_size, threads);
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kDomainError;
    }
    return kParseError;
}

}  // namespace latpoly
