#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symhodge/cli.hpp"
#include "symhodge/json_io.hpp"

using namespace symhodge;

namespace {

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
};

RunOutcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sym prints the canonical polynomial") {
    const RunOutcome r = run({"sym", "--preset", "torus", "--d", "1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + t*v + t*u + 2*t^2*u*v + t^3*u*v^2 + t^3*u^2*v + t^4*u^2*v^2\n");
}

TEST_CASE("sym --method all prints three tagged agreeing results") {
    const RunOutcome r = run({"sym", "--preset", "cstar", "--r", "1", "--n", "2",
                              "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "det: 1 + t*u*v\npartition: 1 + t*u*v\ncheah: 1 + t*u*v\n");
}

TEST_CASE("results_agree flags mismatches") {
    const SymResult a{2, TriPoly(1), SymMethod::det};
    const SymResult b{2, TriPoly(2), SymMethod::partition};
    CHECK(results_agree({a, a}));
    CHECK_FALSE(results_agree({a, b}));
}

TEST_CASE("identity checkers run from the command line") {
    const RunOutcome pass = run({"identity", "combgl", "--m", "1", "--order", "2"});
    CHECK(pass.code == 0);
    CHECK(pass.out == "PASS\n");

    const RunOutcome betti = run({"identity", "betti", "--r", "1,1", "--order", "3"});
    CHECK(betti.code == 0);
    CHECK(betti.out == "PASS\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"sym", "--preset", "nosuch", "--n", "2"}).code == 2);
    CHECK(run({"sym", "--n", "2"}).code == 2);                      // no source
    CHECK(run({"sym", "--preset", "torus", "--n", "2"}).code == 2); // missing --d
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"isotypic", "--preset", "torus", "--d", "1", "--n", "2",
               "--lambda", "3"}).code == 2);  // |lambda| != n
    CHECK(run({"preset", "--preset", "lie", "--gens", "3"}).code == 2);  // bad pair
    CHECK(run({"sym", "--preset", "torus", "--d", "1", "--file", "x.json",
               "--n", "1"}).code == 2);  // two sources
}

TEST_CASE("domain errors exit with 1") {
    CHECK(run({"mhp", "--file", "/nonexistent/path.json"}).code == 1);

    const auto even_degree = write_temp("symhodge_even_degree.json",
                                        R"({"generators": [{"d": 2, "p": 1, "q": 1, "r": 1}]})");
    const RunOutcome r = run({"mhp", "--file", even_degree.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("odd") != std::string::npos);
}

TEST_CASE("presentation files round-trip with duplicate merging") {
    const auto dup = write_temp(
        "symhodge_dup.json",
        R"({"generators": [{"d":1,"p":1,"q":1,"r":1}, {"d":1,"p":1,"q":1,"r":2}]})");
    const RunOutcome r = run({"preset", "--file", dup.string()});
    CHECK(r.code == 0);
    const Json parsed = Json::parse(r.out);
    REQUIRE(parsed.at("generators").size() == 1);
    CHECK(parsed.at("generators")[0].at("r") == 3);
}

TEST_CASE("every preset serialization reloads to an equal presentation") {
    const std::vector<ExteriorPresentation> presets{
        torus_preset(2), cstar_preset(3), gl_preset(3), lag_preset({1, 2}),
        lie_preset({{3, 1}, {7, 2}})};
    for (const ExteriorPresentation& pres : presets) {
        const Json j = presentation_to_json(pres);
        CHECK(presentation_from_json(j) == pres);
    }
}

TEST_CASE("json output is byte-stable across runs") {
    const std::vector<std::string> args{"sym", "--preset", "gl", "--m", "2", "--n", "3",
                                        "--json"};
    const RunOutcome first = run(args);
    const RunOutcome second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    const Json parsed = Json::parse(first.out);
    CHECK(parsed.at("n") == 3);
    CHECK(parsed.at("method") == "det");
}

TEST_CASE("quotient command") {
    const auto cyclic = write_temp("symhodge_cyclic.txt", "[1,2,3]\n[2,3,1]\n[3,1,2]\n");
    const RunOutcome r = run({"quotient", "--preset", "torus", "--d", "1", "--n", "3",
                              "--subgroup", cyclic.string()});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 4) == "1 + ");
    CHECK(r.out.find("t^6*u^3*v^3\n") != std::string::npos);  // top class of the quotient

    const auto broken = write_temp("symhodge_broken.txt", "[2,3,1]\n");
    CHECK(run({"quotient", "--preset", "torus", "--d", "1", "--n", "3", "--subgroup",
               broken.string()}).code == 1);
}

TEST_CASE("cheah command") {
    const RunOutcome r = run({"cheah", "--preset", "cstar", "--r", "1", "--order", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "z^0: 1\nz^1: 1 + t*u*v\nz^2: 1 + t*u*v\n");

    CHECK(run({"cheah", "--preset", "cstar", "--r", "1", "--order", "2", "--compact"}).code ==
          2);  // --compact needs --dim
    const RunOutcome compact = run({"cheah", "--preset", "cstar", "--r", "1", "--order", "1",
                                    "--compact", "--dim", "1"});
    CHECK(compact.code == 0);
    CHECK(compact.out == "z^0: 1\nz^1: t + t^2*u*v\n");
}

TEST_CASE("equivariant and isotypic commands") {
    const RunOutcome equi = run({"equivariant", "--preset", "torus", "--d", "1", "--n", "2"});
    CHECK(equi.code == 0);
    CHECK(equi.out.find("2^1") != std::string::npos);
    CHECK(equi.out.find("1^2") != std::string::npos);

    const RunOutcome iso = run({"isotypic", "--preset", "torus", "--d", "1", "--n", "2",
                                "--lambda", "2"});
    CHECK(iso.code == 0);
    CHECK(iso.out == "1 + t*v + t*u + 2*t^2*u*v + t^3*u*v^2 + t^3*u^2*v + t^4*u^2*v^2\n");
}

TEST_CASE("poincare and epoly commands") {
    CHECK(run({"poincare", "--preset", "gl", "--m", "2"}).out == "1 + t + t^3 + t^4\n");
    CHECK(run({"epoly", "--preset", "cstar", "--r", "1"}).out == "1 - u*v\n");
    const RunOutcome lie = run({"poincare", "--preset", "lie", "--gens", "3:1", "--n", "2"});
    CHECK(lie.code == 0);
}

TEST_CASE("weightless presentations carry a formal-weights note") {
    const RunOutcome r = run({"mhp", "--preset", "lie", "--gens", "3:1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("formal") != std::string::npos);
    const RunOutcome poincare_run = run({"poincare", "--preset", "lie", "--gens", "3:1"});
    CHECK(poincare_run.err.empty());
}

TEST_CASE("golden files pin the canonical serializations") {
    struct Golden {
        const char* file;
        std::vector<std::string> args;
    };
    const std::vector<Golden> cases{
        {"sym_torus1_n2.json", {"sym", "--preset", "torus", "--d", "1", "--n", "2", "--json"}},
        {"equivariant_torus1_n3.json",
         {"equivariant", "--preset", "torus", "--d", "1", "--n", "3", "--json"}},
        {"cheah_cstar1_order3.txt", {"cheah", "--preset", "cstar", "--r", "1", "--order", "3"}},
        {"identity_combgl_m2_order3.json",
         {"identity", "combgl", "--m", "2", "--order", "3", "--json"}},
        {"preset_lag_2_1.json", {"preset", "--preset", "lag", "--r", "2,1"}},
    };
    for (const Golden& g : cases) {
        CAPTURE(g.file);
        const std::filesystem::path path =
            std::filesystem::path(SYMHODGE_TEST_DIR) / "golden" / g.file;
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream expected;
        expected << in.rdbuf();
        const RunOutcome r = run(g.args);
        CHECK(r.code == 0);
        CHECK(r.out == expected.str());
    }
}

TEST_CASE("polynomials round-trip through their JSON form") {
    const TriPoly poly = sym_mhp_det(torus_preset(2), 3).poly;
    CHECK(poly_from_json(poly_to_json(poly)) == poly);
    CHECK(poly_from_json(poly_to_json(TriPoly())) == TriPoly());
    // coefficients travel as decimal strings, exact at any size
    const TriPoly huge(Int("123456789012345678901234567890"), Monomial{1, 2, 3});
    CHECK(poly_from_json(poly_to_json(huge)) == huge);
}

TEST_CASE("help exits cleanly") {
    const RunOutcome r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sym") != std::string::npos);
}

}  // TEST_SUITE
