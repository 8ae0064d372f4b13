#include "doctest.h"

#include "alcoved/alcoved.hpp"
#include "alcoved/polytope_file.hpp"

#include <sstream>

using namespace alcoved;

TEST_CASE("parse a record") {
    const auto rec = parse_polytope_line(
        R"({"dim":2,"constraints":[[1,0,1],[1,0,3],[0,1,1],[2,0,1],[0,2,1]],"seed":7,"generator":"g","label":"sq"})");
    CHECK(rec.hrep.dim() == 2);
    CHECK(rec.hrep.constraints().size() == 4);
    CHECK(rec.hrep.bound(1, 0) == 1);
    CHECK(rec.seed == 7u);
    CHECK(rec.generator == "g");
    CHECK(rec.label == "sq");
}

TEST_CASE("serialized output is canonical and parses back") {
    const auto q = make_qd(2);
    const std::string line = serialize_polytope({q.hrep(), 42, "make_qd", std::nullopt});
    CHECK(line ==
          R"({"dim":2,"constraints":[[0,1,1],[0,2,1],[1,0,1],[1,2,1],[2,0,1],[2,1,1]],"seed":42,"generator":"make_qd"})");
    const auto back = parse_polytope_line(line);
    CHECK(back.hrep == q.hrep());
    CHECK(serialize_polytope(back) == line);
}

TEST_CASE("malformed records") {
    for (const char* bad : {"", "[]", "{\"constraints\":[]}", "{\"dim\":0,\"constraints\":[]}",
                            "{\"dim\":-1,\"constraints\":[]}", "{\"dim\":2}", "{\"dim\":2,\"constraints\":[[1,0]]}",
                            "{\"dim\":2,\"constraints\":[[1,0,1.5]]}", "{\"dim\":2,\"constraints\":[[3,0,1]]}",
                            "{\"dim\":2,\"constraints\":[[1,1,1]]}", "{\"dim\":2,\"constraints\":[],\"seed\":-3}"})
        CHECK_THROWS_AS(parse_polytope_line(bad), ParseError);
}

TEST_CASE("streams") {
    std::istringstream in("{\"dim\":1,\"constraints\":[[1,0,1],[0,1,0]]}\n\n{\"dim\":1,\"constraints\":[[1,0,2]]}\n");
    const auto recs = read_polytope_stream(in);
    CHECK(recs.size() == 2);
    std::istringstream bad("{\"dim\":1,\"constraints\":[]}\nnope\n");
    try {
        (void)read_polytope_stream(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2", 0) == 0);
    }
    std::istringstream empty("\n  \n");
    CHECK_THROWS_AS(read_polytope_stream(empty), ParseError);
    CHECK_THROWS_AS(read_polytope_file("/nonexistent/file.jsonl"), ParseError);
}
