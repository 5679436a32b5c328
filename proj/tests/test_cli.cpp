#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "support/run.hpp"

using namespace galmine::testing;

namespace {

const std::string kData = std::string(GALMINE_DATA_DIR) + "/potential_size.csv";

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("scale writes a burmeister context") {
    auto r = run_cli({"scale", "--input", kData, "--method", "disjunctive"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "B\n");
    CHECK(r.out.find("\n15\n14\n") != std::string::npos);
    CHECK(r.out.find("S43") != std::string::npos);

    SUBCASE("pattern method yields the 11 realized patterns") {
        auto p = run_cli({"scale", "--input", kData, "--method", "pattern"});
        REQUIRE(p.exit_code == 0);
        CHECK(p.out.find("\n15\n11\n") != std::string::npos);
        CHECK(p.out.find("S0231") != std::string::npos);
    }
    SUBCASE("groupings apply before scaling") {
        auto g = run_cli({"scale", "--input", kData, "--method", "pattern", "--group",
                          "presence"});
        REQUIRE(g.exit_code == 0);
        CHECK(g.out.find("S1110") != std::string::npos);  // BERE under presence
    }
    SUBCASE("custom groupings parse from name=pairs form") {
        auto g = run_cli({"scale", "--input", kData, "--method", "pattern", "--group",
                          "flat=0:0,1:0,2:0,3:0"});
        REQUIRE(g.exit_code == 0);
        CHECK(g.out.find("\n15\n1\n") != std::string::npos);  // one all-zero pattern
        CHECK(run_cli({"scale", "--input", kData, "--group", "flat=0:0"}).exit_code == 1);
    }
    SUBCASE("--full-columns emits the whole cross product") {
        auto f = run_cli({"scale", "--input", kData, "--full-columns"});
        REQUIRE(f.exit_code == 0);
        CHECK(f.out.find("\n15\n16\n") != std::string::npos);
        CHECK(f.out.find("S12") != std::string::npos);
    }
    SUBCASE("the name flag fills the header line") {
        auto n = run_cli({"scale", "--input", kData, "--name", "sizes"});
        REQUIRE(n.exit_code == 0);
        CHECK(n.out.substr(0, 8) == "B\nsizes\n");
    }
    SUBCASE("scale refuses already-binary input") {
        write_file("already.cxt", "B\n\n1\n1\n\no\na\nX\n");
        CHECK(run_cli({"scale", "--input", "already.cxt"}).exit_code == 1);
    }
}

TEST_CASE("lattice reports counts") {
    auto r = run_cli({"lattice", "--input", kData});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "35 concepts\n4 levels (excepting top and bottom)\n");

    SUBCASE("a 0-attribute context has one concept") {
        write_file("empty_attrs.cxt", "B\n\n2\n0\n\no1\no2\n\n\n");
        auto e = run_cli({"lattice", "--input", "empty_attrs.cxt"});
        REQUIRE(e.exit_code == 0);
        CHECK(e.out.substr(0, 10) == "1 concept\n");
    }
    SUBCASE("--concepts lists them in paper style") {
        auto c = run_cli({"lattice", "--input", kData, "--concepts"});
        REQUIRE(c.exit_code == 0);
        CHECK(c.out.find("((S10, S22, S33, S41) (ELOC, ELOE, ELON))") != std::string::npos);
    }
}

TEST_CASE("implications print the basis") {
    auto r = run_cli({"implications", "--input", kData});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("S32 ⇒ S10 (support 5)") != std::string::npos);

    auto v = run_cli({"implications", "--input", kData, "--individuals"});
    REQUIRE(v.exit_code == 0);
    CHECK(v.out.find("S32 ⇒ S10 (true for 5 individuals)") != std::string::npos);
}

TEST_CASE("rules respect thresholds") {
    auto r = run_cli({"rules", "--input", kData, "--min-support", "5", "--min-confidence",
                      "1"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("S32 ⇒ S10 (support 5, confidence 5/5)") != std::string::npos);
    CHECK(r.out.find("confidence 5/6") == std::string::npos);

    auto p = run_cli({"rules", "--input", kData, "--min-support", "5", "--min-confidence",
                      "4/5"});
    REQUIRE(p.exit_code == 0);
    CHECK(p.out.find("S22 ⇒ S10 (support 5, confidence 5/6)") != std::string::npos);

    auto six = run_cli({"rules", "--input", kData, "--min-support", "6", "--min-confidence",
                        "4/5"});
    REQUIRE(six.exit_code == 0);
    CHECK(six.out.find("S33 ⇒ S10 (support 6, confidence 6/7)") != std::string::npos);

    auto bad = run_cli({"rules", "--input", kData, "--min-confidence", "0"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("hist prints the worked example") {
    auto r = run_cli({"hist", "--input", kData, "--mode", "union"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.substr(0, 12) == "38 concepts\n");
    CHECK(r.out.find("S:[1,2,3,2]") != std::string::npos);

    auto i = run_cli({"hist", "--input", kData, "--mode", "intersection"});
    REQUIRE(i.exit_code == 0);
    CHECK(i.out.substr(0, 12) == "25 concepts\n");
}

TEST_CASE("export writes documents") {
    auto dot = run_cli({"export", "--input", kData, "--format", "dot"});
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.out.find("digraph lattice {") == 0);

    auto json = run_cli({"export", "--input", kData, "--format", "json", "--sections",
                         "context,concepts,covers,implications"});
    REQUIRE(json.exit_code == 0);
    CHECK(json.out.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.out.find("\"implications\"") != std::string::npos);

    SUBCASE("--output writes the file byte-identically") {
        auto to_file = run_cli({"export", "--input", kData, "--format", "json", "--output",
                                "doc.json"});
        REQUIRE(to_file.exit_code == 0);
        CHECK(to_file.out.empty());
        auto direct = run_cli({"export", "--input", kData, "--format", "json"});
        CHECK(slurp("doc.json") == direct.out);
    }
}

TEST_CASE("exit codes") {
    SUBCASE("unknown subcommand: usage on stderr, exit 1") {
        auto r = run_cli({"frobnicate"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("Usage") != std::string::npos);
    }
    SUBCASE("unknown flag: exit 1") {
        CHECK(run_cli({"lattice", "--input", kData, "--bogus"}).exit_code == 1);
    }
    SUBCASE("missing input file: exit 1 with message") {
        auto r = run_cli({"lattice", "--input", "no_such_file.csv"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("no_such_file.csv") != std::string::npos);
    }
    SUBCASE("malformed csv: exit 1 with line number") {
        write_file("bad.csv", "object,trait,modality,affinity\nx,T,a,9\n");
        auto r = run_cli({"lattice", "--input", "bad.csv"});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
    SUBCASE("the concept guard aborts with exit 2") {
        auto r = run_cli({"lattice", "--input", kData, "--max-concepts", "10"});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("exceeded") != std::string::npos);
    }
    SUBCASE("the guard env var applies, and the flag overrides it") {
        auto env = run_cli({"lattice", "--input", kData}, "GALOIS_MINER_MAX_CONCEPTS=10");
        CHECK(env.exit_code == 2);
        auto flag = run_cli({"lattice", "--input", kData, "--max-concepts", "100000"},
                            "GALOIS_MINER_MAX_CONCEPTS=10");
        CHECK(flag.exit_code == 0);
        auto bad = run_cli({"lattice", "--input", kData}, "GALOIS_MINER_MAX_CONCEPTS=zero");
        CHECK(bad.exit_code == 1);
    }
    SUBCASE("scaling flags are rejected for .cxt input") {
        write_file("tiny.cxt", "B\n\n1\n1\n\no\na\nX\n");
        CHECK(run_cli({"lattice", "--input", "tiny.cxt"}).exit_code == 0);
        CHECK(run_cli({"lattice", "--input", "tiny.cxt", "--method", "pattern"}).exit_code == 1);
        CHECK(run_cli({"hist", "--input", "tiny.cxt", "--mode", "union"}).exit_code == 1);
    }
}

TEST_CASE("--max-affinity widens the scale") {
    write_file("wide.csv",
               "object,trait,modality,affinity\n"
               "x,T,a,5\n"
               "y,T,a,0\n");
    CHECK(run_cli({"lattice", "--input", "wide.csv"}).exit_code == 1);
    auto r = run_cli({"lattice", "--input", "wide.csv", "--max-affinity", "5"});
    CHECK(r.exit_code == 0);
}

TEST_CASE("missing-cell warnings go to stderr, and --strict makes them fatal") {
    write_file("sparse.csv",
               "object,trait,modality,affinity\n"
               "x,T,a,1\n"
               "y,T,b,2\n");
    auto r = run_cli({"lattice", "--input", "sparse.csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning: missing cell (x, T, b)") != std::string::npos);
    auto s = run_cli({"lattice", "--input", "sparse.csv", "--strict"});
    CHECK(s.exit_code == 1);
}

TEST_CASE("repeated runs are byte-identical") {
    for (auto cmd : {std::vector<std::string>{"lattice", "--input", kData, "--concepts"},
                     std::vector<std::string>{"implications", "--input", kData},
                     std::vector<std::string>{"hist", "--input", kData, "--mode", "union"},
                     std::vector<std::string>{"export", "--input", kData, "--format", "json",
                                              "--sections", "context,concepts,covers"}}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("scale output round-trips through lattice") {
    auto scaled = run_cli({"scale", "--input", kData, "--output", "size.cxt"});
    REQUIRE(scaled.exit_code == 0);
    auto from_cxt = run_cli({"lattice", "--input", "size.cxt"});
    auto from_csv = run_cli({"lattice", "--input", kData});
    CHECK(from_cxt.out == from_csv.out);
}
