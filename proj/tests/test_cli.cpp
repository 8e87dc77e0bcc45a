#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "prefcone/instance_io.hpp"
#include "testutil.hpp"

using namespace prefcone;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PREFCONE_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) { return std::string(PREFCONE_FIXTURES) + "/" + name; }

} // namespace

TEST_CASE("validate: reference fixtures pass with exit 0") {
    for (const char* f : {"quad2.json", "lex23.json", "halfplane.json"}) {
        const RunResult r = run("validate " + fixture(f));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"pass\": true") != std::string::npos);
    }
}

TEST_CASE("validate: invalid instance exits 2, unreadable file exits 1") {
    const std::string bad = "/tmp/prefcone_bad_instance.json";
    std::ofstream(bad) << "{\"dim\": 2, \"A\": [[\"1\",\"0\"],[\"0\",\"1\"]], \"cells\": [\"++\",\"--\"]}";
    CHECK(run("validate " + bad).exit_code == 2);
    CHECK(run("validate /tmp/prefcone_missing.json").exit_code == 1);
    std::ofstream("/tmp/prefcone_garbage.json") << "not json";
    CHECK(run("validate /tmp/prefcone_garbage.json").exit_code == 1);
}

TEST_CASE("components: quad2 layout and DOT output") {
    const RunResult r = run("components " + fixture("quad2.json") + " --dot /tmp/prefcone_quad2.dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"relatively_open\": false") != std::string::npos);

    std::ifstream dot("/tmp/prefcone_quad2.dot");
    std::string text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    CHECK(text.find("digraph components") != std::string::npos);
    CHECK(text.find("label=\"++\"") != std::string::npos);
    // Two cover edges into the interior component.
    CHECK(std::count(text.begin(), text.end(), '>') == 2);
}

TEST_CASE("byte-identical output across runs") {
    const RunResult a = run("components " + fixture("quad2.json"));
    const RunResult b = run("components " + fixture("quad2.json"));
    CHECK(a.out == b.out);
    const RunResult c = run("extend " + fixture("quad2.json"));
    const RunResult d = run("extend " + fixture("quad2.json"));
    CHECK(c.out == d.out);
}

TEST_CASE("lineality: lex23 third axis") {
    const RunResult r = run("lineality " + fixture("lex23.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"dim\": 1") != std::string::npos);
    CHECK(r.out.find("\"0\",\n      \"0\",\n      \"1\"") != std::string::npos);
}

TEST_CASE("weak: verdicts for the fixtures") {
    CHECK(run("weak " + fixture("lex23.json")).out.find("\"is_weak\": true") != std::string::npos);
    CHECK(run("weak " + fixture("quad2.json")).out.find("\"is_weak\": false") != std::string::npos);
}

TEST_CASE("cortege / eval / represent pipeline on lex23") {
    const std::string cortege_path = "/tmp/prefcone_lex23_cortege.json";
    const RunResult c = run("cortege " + fixture("lex23.json") + " --out " + cortege_path);
    CHECK(c.exit_code == 0);

    // The extracted cortege is re-parseable and evaluates per the flat rule.
    CHECK(run("eval " + cortege_path + " 2,-5,1").out == "2\n");
    CHECK(run("eval " + cortege_path + " 0,-3,7").out == "-3\n");
    CHECK(run("eval " + cortege_path + " 0,0,9").out == "0\n");

    const RunResult rep = run("represent " + fixture("lex23.json") + " " + cortege_path);
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("\"represents\": true") != std::string::npos);

    // A reversed cortege is rejected.
    std::ofstream("/tmp/prefcone_reversed.json") << "[[\"0\",\"1\",\"0\"],[\"1\",\"0\",\"0\"]]";
    const RunResult bad = run("represent " + fixture("lex23.json") + " /tmp/prefcone_reversed.json");
    CHECK(bad.exit_code == 0);
    CHECK(bad.out.find("\"represents\": false") != std::string::npos);

    CHECK(run("cortege " + fixture("quad2.json")).exit_code == 2);
}

TEST_CASE("linear: verdict per fixture") {
    const RunResult half = run("linear " + fixture("halfplane.json"));
    CHECK(half.exit_code == 0);
    CHECK(half.out.find("\"linear\": true") != std::string::npos);
    const RunResult lex = run("linear " + fixture("lex23.json"));
    CHECK(lex.out.find("\"linear\": false") != std::string::npos);
    CHECK(lex.out.find("multiple_components") != std::string::npos);
}

TEST_CASE("extend: quad2 produces the diagonal halfspace, output re-parses") {
    const std::string out_path = "/tmp/prefcone_quad2_ext.json";
    const RunResult r = run("extend " + fixture("quad2.json") + " --out " + out_path);
    CHECK(r.exit_code == 0);

    std::ifstream in(out_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // The embedded instance is loadable by the library (round-trip property).
    const auto cpos = text.find("\"extended\": ");
    REQUIRE(cpos != std::string::npos);
    const std::string inner = text.substr(cpos + 12, text.rfind('}') - (cpos + 12));
    SignCone ext = instance_from_json(inner);
    CHECK(ext.dim() == 2);
    CHECK(validate_partial_preference(ext).pass());
    CHECK(ext.contains(testutil::vec({1, 0})));
    CHECK(ext.contains(testutil::vec({0, 1})));
    CHECK(ext.contains(testutil::vec({1, 1})));
}

TEST_CASE("witness: quad2 incomparable pair gives a certified nonpositive value") {
    const RunResult r = run("witness " + fixture("quad2.json") + " 0,0 1,-1");
    CHECK(r.exit_code == 0);
    const auto vpos = r.out.find("\"value\": \"");
    REQUIRE(vpos != std::string::npos);
    const std::string value = r.out.substr(vpos + 10, r.out.find('"', vpos + 10) - (vpos + 10));
    CHECK(parse_rational(value) < 0);

    CHECK(run("witness " + fixture("quad2.json") + " 0,0 1,1").exit_code == 2);
}

TEST_CASE("selftest: a short sweep passes") {
    const RunResult r = run("selftest --seed 11 --count 3 --pairs 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("io: instance serialization round-trips") {
    SignCone cone = testutil::lex23();
    const std::string text = instance_to_json(cone);
    SignCone back = instance_from_json(text);
    CHECK(back.dim() == cone.dim());
    CHECK(back.matrix().rows == cone.matrix().rows);
    CHECK(back.cells().size() == cone.cells().size());
    CHECK(instance_to_json(back) == text);
}

TEST_CASE("io: cortege and point parsing") {
    const Cortege c = cortege_from_json("[[\"1\",\"0\"],[\"0\",\"1/2\"]]");
    CHECK(c.size() == 2);
    CHECK(c.functionals[1][1] == Rational(1, 2));
    CHECK(cortege_to_json(c) == "[\n  [\n    \"1\",\n    \"0\"\n  ],\n  [\n    \"0\",\n    \"1/2\"\n  ]\n]\n");
    CHECK_THROWS_AS(cortege_from_json("[]"), parse_error);
    CHECK_THROWS_AS(cortege_from_json("[[\"0\",\"0\"]]"), parse_error);

    const RatVector p = point_from_string("1,-1/2,3", 3);
    CHECK(p[1] == Rational(-1, 2));
    CHECK(point_to_string(p) == "1,-1/2,3");
    CHECK_THROWS_AS(point_from_string("1,2", 3), parse_error);
}
