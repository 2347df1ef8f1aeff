#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "mzeta/cli.hpp"
#include "mzeta/config_io.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/expr.hpp"

using namespace mzeta;
using namespace mzeta::testing;

namespace {

std::string data_path(const std::string& name) {
    return std::string(MZETA_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("minimal document parses") {
    std::string text = R"({
        "ambient_dim": 2,
        "components": [{"id": "E1", "m": 1, "nu": 0}],
        "strata": [{"components": ["E1"], "cover": "W1", "geom": 1}],
        "selection": ["E1"]
    })";
    ConfigDocument doc = parse_config(text);
    CHECK(doc.config.ambient_dim == 2);
    REQUIRE(doc.config.components.size() == 1);
    CHECK(doc.config.components[0].m == 1);
    CHECK(doc.config.strata[0].cover == parse_ring_elem("W1"));
    CHECK(doc.config.strata[0].geom == RingElem(1));
    CHECK(validate(doc.config).empty());
}

TEST_CASE("schema violations carry their path") {
    std::string text = R"({
        "ambient_dim": 2,
        "components": [{"id": "E1", "m": 0, "nu": 0}],
        "strata": [],
        "selection": []
    })";
    try {
        parse_config(text);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("finite-type") != std::string::npos);
        CHECK(e.path() == "$.components[0].m");
    }

    CHECK_THROWS_AS(parse_config(R"({"ambient_dim": 2, "components": [], "strata": [],
                                     "selection": [], "extra_key": 1})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"components": [], "strata": [], "selection": []})"),
                    SchemaError);
}

TEST_CASE("expression errors carry path and column") {
    std::string text = R"({
        "ambient_dim": 2,
        "components": [{"id": "E1", "m": 2, "nu": 0}],
        "strata": [{"components": ["E1"], "cover": "mu(2", "geom": "1"}],
        "selection": ["E1"]
    })";
    try {
        parse_config(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.where() == "$.strata[0].cover");
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("json syntax errors report line and column") {
    try {
        parse_config("{\n  \"ambient_dim\": 2,\n  \"components\": [}\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(line_col("ab\ncd", 4) == std::pair<int, int>(2, 2));
}

TEST_CASE("parse and format are mutually inverse on the data corpus") {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(MZETA_DATA_DIR))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    REQUIRE(files.size() >= 16);
    for (const auto& file : files) {
        CAPTURE(file);
        ConfigDocument doc = parse_config(slurp(file));
        std::string text = format_config(doc);
        ConfigDocument again = parse_config(text);
        REQUIRE(again == doc);
        REQUIRE(format_config(again) == text);
    }
}

TEST_CASE("round-trip on a document with every optional section") {
    auto ex = threefold_curve_with_transversal(2, 1, 3, 2, 5, 3);
    ConfigDocument doc;
    doc.config = ex.config;
    doc.blowups = {ex.spec};
    // a codim-1 script step as well, for center_strata serialization
    BlowupSpec deep;
    deep.center_in = {"E1"};
    deep.codim = 2;
    deep.center_strata.emplace(std::set<std::string>{},
                               CenterClasses{parse_ring_elem("mu(2)"), parse_ring_elem("1")});
    deep.new_id = "Edeep";
    doc.blowups.push_back(deep);
    doc.hodge_table = {{"Wg1", parse_qpoly("u*v + 1")}};
    doc.chi_table = {{"Wc1", Rat(2)}};
    ConfigDocument back = parse_config(format_config(doc));
    CHECK(back == doc);
}

TEST_CASE("cli maps error classes to exit codes") {
    CHECK(run({"zeta", "missing.json"}).code == 2);
    CHECK(run({"bogus-command"}).code == 2);
    CHECK(run({"zeta"}).code == 2);

    RunResult ok = run({"validate", data_path("cusp.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "VALID\n");

    // schema error in a file
    std::string bad = std::string(MZETA_DATA_DIR) + "/../build/bad_test_input.json";
    {
        std::ofstream f(bad);
        f << R"({"ambient_dim": 2, "components": [{"id": "E1", "m": 0, "nu": 0}],
                 "strata": [], "selection": []})";
    }
    CHECK(run({"zeta", bad}).code == 2);

    // domain error: config parses but violates model rules
    std::string dangling = std::string(MZETA_DATA_DIR) + "/../build/dangling_test_input.json";
    {
        std::ofstream f(dangling);
        f << R"({"ambient_dim": 2, "components": [{"id": "E1", "m": 1, "nu": 0}],
                 "strata": [{"components": ["E9"], "cover": "1", "geom": "1"}],
                 "selection": ["E1"]})";
    }
    RunResult dom = run({"zeta", dangling});
    CHECK(dom.code == 1);
    CHECK(dom.err.find("dangling") != std::string::npos);
    RunResult val = run({"validate", dangling});
    CHECK(val.code == 1);
    CHECK(val.out.find("violation: dangling component id") != std::string::npos);
    std::filesystem::remove(bad);
    std::filesystem::remove(dangling);
}

TEST_CASE("cli verify and blowup") {
    RunResult v = run({"verify", data_path("example_A_v2.json")});
    CHECK(v.code == 0);
    CHECK(v.out == "INVARIANT: equal\n");

    RunResult b = run({"blowup", data_path("example_A_v2.json")});
    CHECK(b.code == 0);
    ConfigDocument after = parse_config(b.out);
    CHECK(after.config.find_component("Estar") != nullptr);
    CHECK(after.config.find_component("Estar")->m == 5);
    CHECK(after.blowups.empty());

    RunResult campaign = run({"verify", "--random", "5", "--seed", "7"});
    CHECK(campaign.code == 0);
    CHECK(campaign.out.find("CAMPAIGN: cases=5 seed=7") == 0);
    CHECK(campaign.out.find("INVARIANT: equal") != std::string::npos);
    CHECK(campaign.out.find("NEGATIVE-CONTROL: detected") != std::string::npos);
}

TEST_CASE("cli specializations and flags") {
    RunResult t = run({"twisted", "--order", "2", data_path("cusp.json")});
    CHECK(t.code == 0);
    CHECK(t.out.find("/") != std::string::npos);

    RunResult sel = run({"zeta", "--selection", "E1", data_path("cusp.json")});
    CHECK(sel.code == 0);
    // only strata meeting E1 remain
    CHECK(sel.out.find("A(3,3)") == std::string::npos);
    CHECK(sel.out.find("A(2,2)") != std::string::npos);

    std::string out_path = std::string(MZETA_DATA_DIR) + "/../build/cli_out.txt";
    RunResult redirected = run({"topzeta", "--output", out_path, data_path("cusp.json")});
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(slurp(out_path) == "(4*s + 5)/(6*s^2 + 11*s + 5)\n");
    std::filesystem::remove(out_path);

    RunResult limit = run({"limit", data_path("cusp.json")});
    RunResult micc = run({"micc", data_path("cusp.json")});
    RingElem lim = parse_ring_elem(limit.out.substr(0, limit.out.size() - 1));
    RingElem s = parse_ring_elem(micc.out.substr(0, micc.out.size() - 1));
    CHECK(s == -lim);
}

TEST_CASE("cli output is deterministic byte for byte") {
    for (const char* cmd : {"zeta", "naive", "micc", "poles", "topzeta", "hodge", "blowup"}) {
        RunResult a = run({cmd, data_path("example_D_v2.json")});
        RunResult b = run({cmd, data_path("example_D_v2.json")});
        CAPTURE(cmd);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE(!a.out.empty());
    }
}

TEST_CASE("mutated documents fail with typed errors, never crash") {
    std::string base = slurp(data_path("example_D_v2.json"));
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> mode(0, 2);
    std::uniform_int_distribution<int> ch(32, 126);
    int parsed_ok = 0;
    for (int i = 0; i < 400; ++i) {
        std::string text = base;
        switch (mode(rng)) {
            case 0: text.erase(pos(rng), 1); break;
            case 1: text.insert(pos(rng), 1, static_cast<char>(ch(rng))); break;
            default: text[pos(rng)] = static_cast<char>(ch(rng)); break;
        }
        try {
            parse_config(text);
            ++parsed_ok;
        } catch (const ParseError&) {
        } catch (const SchemaError&) {
        } catch (const DomainError&) {
        }
    }
    CHECK(parsed_ok < 400); // most mutations must be rejected

    for (const char* expr : {"mu(99999999999999999999)", "L^99999999999999999999",
                             "W", "((((", "1 + * 2", "A(1)", "mu()", "2^^3"}) {
        CHECK_THROWS_AS(parse_ring_elem(expr), ParseError);
    }
}

TEST_CASE("series round-trips through the cli text form") {
    RunResult z = run({"zeta", data_path("example_B_v3.json")});
    REQUIRE(z.code == 0);
    RationalSeries parsed = parse_series(z.out.substr(0, z.out.size() - 1));
    CHECK(format_series(parsed) + "\n" == z.out);
}
