#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latpoly/point.hpp"

namespace latpoly {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A list of lattice points with an optional one-line label.
struct PolytopeDocument {
    std::vector<Point3> points;
    std::optional<std::string> label;
    bool operator==(const PolytopeDocument&) const = default;
};

/// Text ("x y z" per line, '#' comments, "# label: ..." line) or JSON
/// ({"label": ..., "points": [[x, y, z], ...]}); JSON when the first
/// non-blank character is '{'.
PolytopeDocument parse_document(const std::string& text);
PolytopeDocument parse_text(const std::string& text);
PolytopeDocument parse_json(const std::string& text);

std::string render_text(const PolytopeDocument& doc);
std::string render_json(const PolytopeDocument& doc);

}  // namespace latpoly
