#include "alcoved/polytope_file.hpp"

#include "alcoved/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <istream>

namespace alcoved {

using nlohmann::ordered_json;

PolytopeRecord parse_polytope_line(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("record is not a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() < 1)
        throw ParseError("\"dim\" must be a positive integer");
    if (!j.contains("constraints") || !j["constraints"].is_array())
        throw ParseError("\"constraints\" must be an array of [i, j, k] triples");
    const auto dim = j["dim"].get<std::size_t>();
    std::vector<Constraint> cs;
    for (const auto& t : j["constraints"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_number_integer())
            throw ParseError("constraint " + t.dump() + " is not an [i, j, k] integer triple");
        cs.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), t[2].get<Coord>()});
    }
    PolytopeRecord rec;
    try {
        rec.hrep = canonicalize(cs, dim);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ParseError("\"seed\" must be an unsigned integer");
        rec.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("generator")) {
        if (!j["generator"].is_string()) throw ParseError("\"generator\" must be a string");
        rec.generator = j["generator"].get<std::string>();
    }
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
        rec.label = j["label"].get<std::string>();
    }
    return rec;
}

std::vector<PolytopeRecord> read_polytope_stream(std::istream& in) {
    std::vector<PolytopeRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_polytope_line(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw ParseError("no polytope records found");
    return out;
}

std::vector<PolytopeRecord> read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_polytope_stream(in);
}

std::string serialize_polytope(const PolytopeRecord& rec) {
    ordered_json j;
    j["dim"] = rec.hrep.dim();
    ordered_json cs = ordered_json::array();
    for (const auto& c : rec.hrep.constraints()) cs.push_back({c.i, c.j, c.bound});
    j["constraints"] = std::move(cs);
    if (rec.seed) j["seed"] = *rec.seed;
    if (rec.generator) j["generator"] = *rec.generator;
    if (rec.label) j["label"] = *rec.label;
    return j.dump();
}

}  // namespace alcoved
