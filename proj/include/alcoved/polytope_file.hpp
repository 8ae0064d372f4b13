#pragma once

// Line-oriented polytope records: one JSON object per line,
//   {"dim": d, "constraints": [[i, j, k], ...], "seed": s, "generator": g, "label": l}
// where [i, j, k] means x_i - x_j <= k with x_0 = 0. seed/generator/label are
// optional.

#include "alcoved/lattice_core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace alcoved {

struct PolytopeRecord {
    HRep hrep;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> generator;
    std::optional<std::string> label;

    friend bool operator==(const PolytopeRecord&, const PolytopeRecord&) = default;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonicalizes the constraints. Throws ParseError on malformed input.
PolytopeRecord parse_polytope_line(const std::string& line);

/// Every non-blank line of the stream; throws ParseError naming the line.
std::vector<PolytopeRecord> read_polytope_stream(std::istream& in);
std::vector<PolytopeRecord> read_polytope_file(const std::string& path);

/// Single line, no trailing newline, fixed key order.
std::string serialize_polytope(const PolytopeRecord& rec);

}  // namespace alcoved
