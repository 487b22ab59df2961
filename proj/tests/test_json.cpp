#include <doctest.h>

#include "strandalg/error.hpp"
#include "strandalg/json_io.hpp"

using namespace strandalg;
using io::Json;

namespace {

const PointedMatchedCircle& torus() {
    static const auto z = PointedMatchedCircle::create(4, {1, 2, 1, 2});
    return z;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

// Parse, rebuild the value, serialize: must equal the canonical input.
template <class Read>
void round_trip(const std::string& text, Read read) {
    const Json in = io::parse(text);
    const Json out = read(in);
    CHECK(io::canonical(out) == io::canonical(in));
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::BadSize;
}

}  // namespace

TEST_CASE("round trips") {
    round_trip(R"({"points": 4, "matching": [1,2,1,2]})", [](const Json& j) { return io::to_json(io::pmc_from_json(j)); });
    round_trip(R"({"ambient": 4, "strands": [[1,3],[2,2]]})",
               [](const Json& j) { return io::to_json(io::strand_diagram_from_json(j)); });
    round_trip(R"({"ambient": 4, "terms": [[[1,3],[2,2]], [[1,3],[4,4]]]})",
               [](const Json& j) { return io::to_json(io::algebra_element_from_json(j)); });
    round_trip(R"({"s": [1], "chords": [[1,2]]})",
               [](const Json& j) { return io::to_json(io::generator_from_json(j, torus())); });
    round_trip(R"({"s": [1,2], "chords": [[1,4],[2,3]]})",
               [](const Json& j) { return io::to_json(io::generator_from_json(j, torus())); });
    round_trip(R"({"maslov2": -1, "alpha": [1,0,0]})",
               [](const Json& j) { return io::to_json(io::grading_from_json(j, 4)); });
    round_trip(R"({"layers": [[[1,3]],[[2,4]]]})",
               [](const Json& j) { return io::to_json(io::chord_arc_diagram_from_json(j, 4)); });
    round_trip(R"({"segments": [[2,3],[1,2]]})",
               [](const Json& j) { return io::segments_to_json(io::segments_from_json(j, 4)); });
    round_trip(R"({"mult": [1, 0, -2]})", [](const Json& j) { return io::to_json(io::domain_from_json(j)); });
    for (const char* name : {"bigon.json", "square.json", "boundary_pair.json"}) {
        const Json in = io::parse_file(fixture(name));
        auto out = io::to_json(io::bordered_diagram_from_json(in));
        // Interior regions may omit their boundary segments; the reader fills in zeros.
        Json expected = in;
        for (auto& r : expected["regions"])
            if (!r.contains("bseg")) r["bseg"] = std::vector<int>(in["pmc"]["points"].get<int>() - 1, 0);
        CHECK(io::canonical(out) == io::canonical(expected));
    }
}

TEST_CASE("canonical form sorts keys and drops whitespace") {
    CHECK(io::canonical(io::parse("{ \"b\" : 1,\n \"a\": [ 1, 2 ] }")) == R"({"a":[1,2],"b":1})");
}

TEST_CASE("syntax errors carry line and column") {
    try {
        io::parse("{\"points\": 4,\n \"matching\": [1, 2, 1, 2\n}", "file.json");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(std::string(e.what()).find("file.json:3:1") != std::string::npos);
    }
    CHECK(code_of([] { io::parse_file(fixture("corrupt.json")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::parse_file(fixture("does-not-exist.json")); }) == ErrorCode::Parse);
}

TEST_CASE("structural and domain errors") {
    CHECK(code_of([] { io::pmc_from_json(io::parse(R"({"points": 4})")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::pmc_from_json(io::parse(R"({"points": 4, "matching": [1,2,"x",2]})")); }) ==
          ErrorCode::Parse);
    CHECK(code_of([] { io::pmc_from_json(io::parse(R"({"points": 8, "matching": [1,2,1,2]})")); }) ==
          ErrorCode::BadSize);
    CHECK(code_of([] { io::pmc_from_json(io::parse_file(fixture("disconnected.json"))); }) ==
          ErrorCode::SurgeryDisconnected);
    CHECK(code_of([] { io::generator_from_json(io::parse(R"({"s": [3], "chords": []})"), torus()); }) ==
          ErrorCode::Parse);
    CHECK(code_of([] { io::generator_from_json(io::parse(R"({"s": [1], "chords": [[2,1]]})"), torus()); }) ==
          ErrorCode::InvalidChord);
    CHECK(code_of([] { io::generator_from_json(io::parse(R"({"s": [1], "chords": [[1,2],[1,3]]})"), torus()); }) ==
          ErrorCode::InconsistentChords);
    CHECK(code_of([] { io::grading_from_json(io::parse(R"({"maslov2": 0, "alpha": [1,0,0]})"), 4); }) ==
          ErrorCode::EpsilonViolation);
    CHECK(code_of([] { io::strand_diagram_from_json(io::parse(R"({"ambient": 4, "strands": [[3,1]]})")); }) ==
          ErrorCode::InvalidDiagram);
    try {
        io::pmc_from_json(io::parse(R"({"points": 4, "matching": [1,2,"x",2]})"));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("/matching/2") != std::string::npos);
    }
}
