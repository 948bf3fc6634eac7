#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/invariants.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

enum class Family { W1_22, W1_21, W1_32, W1_31, W2_31, W2_41, Unsized5 };

std::string family_name(Family f);

struct ClassRecord {
    Family family = Family::Unsized5;
    /// (p, q) for W1-(2,1), (a, b) for W1-(3,2).
    std::optional<std::array<std::int64_t, 2>> params;
    std::optional<Signature> signature;
    std::int64_t width = 0;
    std::optional<FivePointVector> vector;
    /// Table row representative; for UNSIZED5 the lattice points of the input.
    PointConfiguration representative;
    /// Sends the lattice points of the input onto the representative.
    std::optional<UnimodularAffineMap> witness;
    std::size_t size = 0;
};

/// Label such as "W2-(4,1)[-7,1,1,2,3]" or "W1-(2,1)[1,3]".
std::string record_label(const ClassRecord& r);

/// One row of the width-two part of the table.
struct TableRow {
    Family family;
    FivePointVector vector;
    PointConfiguration representative;
};

/// The nine width-two classes in table order.
const std::vector<TableRow>& width_two_table();

PointConfiguration representative_22();
PointConfiguration representative_21(std::int64_t p, std::int64_t q);
PointConfiguration representative_32(std::int64_t a, std::int64_t b);
PointConfiguration representative_31_width1();

struct StructureForm {
    /// Values of the normalizing functional on the input points, in input order.
    std::array<std::int64_t, 5> levels{};
    std::int64_t h = 0;
    /// Image of the input: standard T(p, q) in positions 0..3, fifth point last.
    PointConfiguration normalized;
    UnimodularAffineMap map;
    std::int64_t p = 0;
    std::int64_t q = 0;
    /// Index (in the input) of the point off the tetrahedron.
    std::size_t omitted = 0;
};

StructureForm structure_normalize(const PointConfiguration& cfg);

ClassRecord classify_size5(const PointConfiguration& cfg);

struct CensusOptions {
    std::int64_t max_q = 12;
    unsigned threads = 1;
};

struct CensusClass {
    std::string key;
    ClassRecord record;
    /// Smallest q at which the structured search met the class.
    std::int64_t first_q = 0;
};

/// Structured search over T(p, q) plus a fifth point (a, b, h), h in {-1, -2},
/// deduplicated by canonical key; results in table order.
std::vector<CensusClass> structured_census(const CensusOptions& opts = {});
std::vector<ClassRecord> enumerate_size5_width_ge2(const CensusOptions& opts = {});

struct BoxSweepOptions {
    std::int64_t box = 4;
    unsigned threads = 1;
};

/// Visits every 5-point subset of [0, box]^3 whose hull has exactly five
/// lattice points, is 3-dimensional, and touches the three coordinate
/// planes (one representative per translation class). Points come in
/// lexicographic order. Calls sharing a part index come from one worker, in
/// a fixed order; part indices follow the first point.
using BoxVisitor = std::function<void(std::size_t part, const std::array<Point3, 5>& pts)>;
std::size_t box_sweep_parts(const BoxSweepOptions& opts);
void box_sweep_size5(const BoxSweepOptions& opts, const BoxVisitor& visit);

struct CandidateRow {
    std::int64_t c, d, a, b;
    std::int64_t p, q;
    bool survives;
    /// ((a-2)q - bp, pb - qa, q + b, -b, q) for survivors.
    std::optional<std::array<std::int64_t, 5>> formula_vector;
    /// Five-point vector of {T(p,q), (a,b,-1)} for survivors.
    std::optional<FivePointVector> computed_vector;
};

std::vector<CandidateRow> enumerate_nonsymmetric41_candidates();

struct Symmetric41Result {
    /// (p, q) passing the three congruence tests, q <= max_q.
    std::vector<std::array<std::int64_t, 2>> survivors;
    std::vector<ClassRecord> records;
    /// Map between the p = 2 and p = 3 configurations for q = 5.
    std::optional<UnimodularAffineMap> p2_to_p3;
};

Symmetric41Result enumerate_symmetric41(std::int64_t max_q = 40);

/// {T(p, q), (-p-1, -q, -2)}.
PointConfiguration symmetric41_configuration(std::int64_t p, std::int64_t q);

}  // namespace latpoly
