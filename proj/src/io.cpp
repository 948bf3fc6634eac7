#include "latpoly/io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace latpoly {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void check_nonempty(const PolytopeDocument& d) {
    if (d.points.empty()) throw ParseError("document has no points");
}

void check_label(const std::string& label) {
    if (label.find('\n') != std::string::npos) throw ParseError("label must be a single line");
}

}  // namespace

PolytopeDocument parse_text(const std::string& text) {
    PolytopeDocument doc;
    std::istringstream in(text);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const std::string comment = trim(line.substr(hash + 1));
            if (trim(line.substr(0, hash)).empty() && comment.rfind("label:", 0) == 0) {
                if (doc.label) throw ParseError("line " + std::to_string(lineno) + ": second label");
                doc.label = trim(comment.substr(6));
            }
            line.erase(hash);
        }
        std::istringstream tok(line);
        std::vector<std::int64_t> vals;
        std::string word;
        while (tok >> word) {
            std::int64_t v = 0;
            const char* end = word.data() + word.size();
            auto [ptr, ec] = std::from_chars(word.data() + (word[0] == '+' ? 1 : 0), end, v);
            if (ec != std::errc() || ptr != end)
                throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + word + "'");
            vals.push_back(v);
        }
        if (vals.empty()) continue;
        if (vals.size() != 3)
            throw ParseError("line " + std::to_string(lineno) + ": expected 3 coordinates, got " +
                             std::to_string(vals.size()));
        doc.points.push_back({vals[0], vals[1], vals[2]});
    }
    check_nonempty(doc);
    return doc;
}

PolytopeDocument parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("JSON document must be an object");
    PolytopeDocument doc;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("label must be a string");
        doc.label = j["label"].get<std::string>();
        check_label(*doc.label);
    }
    if (!j.contains("points") || !j["points"].is_array()) throw ParseError("missing points array");
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 3) throw ParseError("each point must be an array of 3 integers");
        std::array<std::int64_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!p[i].is_number_integer()) throw ParseError("coordinates must be integers");
            if (p[i].is_number_unsigned() && p[i].get<std::uint64_t>() > INT64_MAX)
                throw ParseError("coordinate out of range");
            c[i] = p[i].get<std::int64_t>();
        }
        doc.points.push_back(Point3::from_array(c));
    }
    check_nonempty(doc);
    return doc;
}

PolytopeDocument parse_document(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

std::string render_text(const PolytopeDocument& doc) {
    std::ostringstream os;
    if (doc.label) {
        check_label(*doc.label);
        os << "# label: " << *doc.label << '\n';
    }
    for (const auto& p : doc.points) os << p.x << ' ' << p.y << ' ' << p.z << '\n';
    return os.str();
}

std::string render_json(const PolytopeDocument& doc) {
    nlohmann::ordered_json j;
    if (doc.label) j["label"] = *doc.label;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : doc.points) j["points"].push_back({p.x, p.y, p.z});
    return j.dump() + "\n";
}

}  // namespace latpoly
