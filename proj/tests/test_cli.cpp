#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NPCERT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check certifies the first example family") {
    auto r = run_cli("check --poly \"27,108,108,108,108,108,4\" --primes 2,3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "Irreducible"));
    CHECK(contains(r.output, "TheoremB"));
}

TEST_CASE("check is inconclusive on a reducible input") {
    auto r = run_cli("check --poly \"1,0,-1\"");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "Inconclusive"));
}

TEST_CASE("check fires Eisenstein") {
    auto r = run_cli("check --poly \"2,2,1\" --primes 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "Eisenstein"));
}

TEST_CASE("check accepts expression syntax and JSON output") {
    auto r = run_cli("check --poly \"x^2+2*x+2\" --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["polynomial"] == "2,2,1");
    CHECK(j["verdict"] == "Irreducible");
    CHECK(j["fired_rule"] == "Eisenstein");
}

TEST_CASE("check rejects bad input with exit 2") {
    CHECK(run_cli("check --poly \"2,,1\"").exit_code == 2);
    CHECK(run_cli("check --poly \"1,1,1\" --primes 4").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("check --poly \"0\"").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("polygon text output lists the reference vertices") {
    auto r = run_cli("polygon --poly \"16,4,-4,2,-2,1,2,-1,-1,16,4,32\" --primes 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(0,4) (1,2) (5,0) (8,0) (10,2) (11,5)"));
    CHECK(contains(r.output, "segment widths: 1 2 2 1 1 1 1 1 1"));
}

TEST_CASE("polygon lists edges with exact slopes") {
    auto r = run_cli("polygon --poly \"2,2,1\" --primes 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "slope -1/2"));
    CHECK(contains(r.output, "m=1"));
}

TEST_CASE("polygon SVG output is one well-formed drawing per prime") {
    auto r = run_cli("polygon --poly \"27,108,108,108,108,108,4\" --primes 2,3 --format svg");
    CHECK(r.exit_code == 0);
    std::size_t svg_count = 0, pos = 0;
    while ((pos = r.output.find("<svg", pos)) != std::string::npos) {
        ++svg_count;
        pos += 4;
    }
    CHECK(svg_count == 2);
    std::size_t polyline_count = 0;
    pos = 0;
    while ((pos = r.output.find("<polyline", pos)) != std::string::npos) {
        ++polyline_count;
        pos += 9;
    }
    CHECK(polyline_count == 2);
    CHECK(contains(r.output, "</svg>"));
    // crude well-formedness: angle brackets balance
    long depth = 0;
    for (char ch : r.output) {
        if (ch == '<') ++depth;
        if (ch == '>') --depth;
        CHECK(depth >= 0);
    }
    CHECK(depth == 0);
}

TEST_CASE("oracle reports factorizations, irreducibility, and limits") {
    auto r = run_cli("oracle --poly \"4,6,4,1\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "(x+2)(x^2+2x+2)"));

    r = run_cli("oracle --poly \"1,1,1\"");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "Irreducible"));

    r = run_cli("oracle --poly \"1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1\"");
    CHECK(r.exit_code == 3);
    CHECK(contains(r.output, "LimitExceeded"));
}

TEST_CASE("generate emits the published instantiations") {
    auto r = run_cli("generate --family 1 -p 2 -q 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "27,108,108,108,108,108,4\n");

    r = run_cli("generate --family 5 -p 2 -q 3");
    CHECK(r.output == "1,9,9,18,18,18,18\n");

    r = run_cli("generate --family 3 -p 2 -q 3 --m 0");
    CHECK(r.output == "1,9,18,18,18,18,18\n");

    CHECK(run_cli("generate --family 9 -p 2 -q 3").exit_code == 2);
    CHECK(run_cli("generate --family 1 -p 2 -q 2").exit_code == 2);
    CHECK(run_cli("generate --family 1 -p 4 -q 3").exit_code == 2);
    CHECK(run_cli("generate --family 3 -p 2 -q 3").exit_code == 2);
}

TEST_CASE("generated families feed back into check") {
    auto gen = run_cli("generate --family 7 -p 5 -q 7");
    REQUIRE(gen.exit_code == 0);
    std::string coeffs = gen.output.substr(0, gen.output.size() - 1);
    auto chk = run_cli("check --poly \"" + coeffs + "\" --primes 5,7");
    CHECK(chk.exit_code == 0);
    CHECK(contains(chk.output, "Irreducible"));
}

TEST_CASE("file input and file output round-trip") {
    std::string in_path = "/tmp/npcert_test_in.txt";
    std::string out_path = "/tmp/npcert_test_out.json";
    {
        FILE* f = fopen(in_path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("x^2 + 2x + 2\n", f);
        fclose(f);
    }
    auto r = run_cli("check --file " + in_path + " --format json --out " + out_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    {
        FILE* f = fopen(out_path.c_str(), "r");
        REQUIRE(f != nullptr);
        std::string content;
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, got);
        fclose(f);
        auto j = nlohmann::json::parse(content);
        CHECK(j["verdict"] == "Irreducible");
    }
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());

    CHECK(run_cli("check --file /nonexistent/p.txt").exit_code == 2);
    CHECK(run_cli("check --poly \"1,1\" --file /tmp/x.txt").exit_code == 2);
}

TEST_CASE("prime discovery flags") {
    // endpoints mode misses the interior prime 3; all mode finds it
    auto ends = run_cli("check --poly \"2,3,2\" --format json");
    auto all = run_cli("check --poly \"2,3,2\" --mode all --format json");
    auto je = nlohmann::json::parse(ends.output);
    auto ja = nlohmann::json::parse(all.output);
    CHECK(je["primes"] == nlohmann::json::parse("[2]"));
    CHECK(ja["primes"] == nlohmann::json::parse("[2,3]"));

    // --auto-primes unions discovery into an explicit list
    auto unioned = run_cli("check --poly \"2,2,1\" --primes 5 --auto-primes --format json");
    auto ju = nlohmann::json::parse(unioned.output);
    CHECK(ju["primes"] == nlohmann::json::parse("[2,5]"));

    // small bound excludes larger discovered primes
    auto bounded = run_cli("check --poly \"14,7,2\" --bound 3 --format json");
    auto jb = nlohmann::json::parse(bounded.output);
    CHECK(jb["primes"] == nlohmann::json::parse("[2]"));
}

TEST_CASE("polygon JSON carries the full edge description") {
    auto r = run_cli("polygon --poly \"27,108,108,108,108,108,4\" --primes 2 --format json");
    CHECK(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.output);
    REQUIRE(arr.size() == 1);
    auto& j = arr[0];
    CHECK(j["prime"] == 2);
    CHECK(j["vertices"] == nlohmann::json::parse("[[0,0],[6,2]]"));
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0]["slope_num"] == 1);
    CHECK(j["edges"][0]["slope_den"] == 3);
    CHECK(j["edges"][0]["m"] == 2);
    CHECK(j["edges"][0]["x"] == 3);
    CHECK(j["segment_widths"] == nlohmann::json::parse("[3,3]"));
    CHECK(j["shape"] == "SingleEdgePos");
}

TEST_CASE("svg files are written per prime") {
    auto r = run_cli("polygon --poly \"27,108,108,108,108,108,4\" --primes 2,3 --format svg --out /tmp/npcert_poly.svg");
    CHECK(r.exit_code == 0);
    FILE* a = fopen("/tmp/npcert_poly.p2.svg", "r");
    FILE* b = fopen("/tmp/npcert_poly.p3.svg", "r");
    CHECK(a != nullptr);
    CHECK(b != nullptr);
    if (a) fclose(a);
    if (b) fclose(b);
    std::remove("/tmp/npcert_poly.p2.svg");
    std::remove("/tmp/npcert_poly.p3.svg");
}

TEST_CASE("identical invocations are byte-identical") {
    std::string cmd = "check --poly \"27,108,108,108,108,108,4\" --format json";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.output == b.output);
    CHECK(a.exit_code == b.exit_code);

    auto p1 = run_cli("polygon --poly \"2,2,1\" --primes 2 --format svg");
    auto p2 = run_cli("polygon --poly \"2,2,1\" --primes 2 --format svg");
    CHECK(p1.output == p2.output);
}

TEST_CASE("selftest passes on a fresh build") {
    auto r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "all checks passed"));
    CHECK(contains(r.output, "family-certification"));
    CHECK(contains(r.output, "merge-law: 1000 random pairs"));
    CHECK_FALSE(contains(r.output, "FAIL"));
}
