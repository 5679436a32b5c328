#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "galmine/csv.hpp"
#include "galmine/export.hpp"
#include "galmine/scaling.hpp"
#include "support/fixtures.hpp"

using namespace galmine;
using namespace galmine::testing;

namespace {

const char* kTwoPlantCsv =
    "object,trait,modality,affinity\n"
    "BERE,S,<0.08m,1\n"
    "BERE,S,0.08-0.3m,2\n"
    "BERE,S,0.3-1m,3\n"
    "BERE,S,1-5m,0\n"
    "CALO,S,<0.08m,0\n"
    "CALO,S,0.08-0.3m,1\n"
    "CALO,S,0.3-1m,2\n"
    "CALO,S,1-5m,2\n";

}  // namespace

TEST_CASE("the bundled dataset matches the fixture") {
    auto loaded = ingest_csv(std::string(GALMINE_DATA_DIR) + "/potential_size.csv");
    CHECK(loaded.warnings.empty());
    const auto& mvc = loaded.context;
    auto expected = size_context();
    REQUIRE(mvc.objects() == expected.objects());
    REQUIRE(mvc.trait_count() == 1);
    CHECK(mvc.traits()[0].code == "S");
    CHECK(mvc.traits()[0].modalities == expected.traits()[0].modalities);
    for (std::size_t o = 0; o < mvc.object_count(); ++o)
        for (std::size_t m = 0; m < 4; ++m)
            CHECK(mvc.affinity(o, 0, m) == expected.affinity(o, 0, m));
}

TEST_CASE("csv basics") {
    SUBCASE("comments and blank lines are skipped") {
        auto r = ingest_csv_text("# hello\n\nobject,trait,modality,affinity\n# more\nx,T,a,1\n");
        CHECK(r.context.object_count() == 1);
        CHECK(r.warnings.empty());
    }
    SUBCASE("an empty file with header gives an empty context") {
        auto r = ingest_csv_text("object,trait,modality,affinity\n");
        CHECK(r.context.object_count() == 0);
        CHECK(r.context.trait_count() == 0);
    }
    SUBCASE("a missing header is an error") {
        CHECK_THROWS_AS(ingest_csv_text(""), InputError);
        CHECK_THROWS_AS(ingest_csv_text("x,T,a,1\n"), InputError);
    }
}

TEST_CASE("csv errors carry line numbers") {
    SUBCASE("out-of-range affinity") {
        CHECK_THROWS_WITH_AS(
            ingest_csv_text("object,trait,modality,affinity\nx,T,a,4\n"),
            "line 2: affinity 4 out of range 0..3", InputError);
    }
    SUBCASE("non-integer affinity") {
        CHECK_THROWS_WITH_AS(ingest_csv_text("object,trait,modality,affinity\nx,T,a,lots\n"),
                             "line 2: affinity \"lots\" is not an integer", InputError);
    }
    SUBCASE("wrong column count") {
        CHECK_THROWS_WITH_AS(ingest_csv_text("object,trait,modality,affinity\nx,T,a\n"),
                             "line 2: expected 4 fields, got 3", InputError);
    }
    SUBCASE("duplicate triple names both lines") {
        CHECK_THROWS_WITH_AS(
            ingest_csv_text("object,trait,modality,affinity\nx,T,a,1\n# gap\nx,T,a,2\n"),
            "line 4: duplicate record for (x, T, a), first at line 2", InputError);
    }
}

TEST_CASE("missing cells default to zero with a warning") {
    const char* sparse =
        "object,trait,modality,affinity\n"
        "x,T,a,1\n"
        "y,T,b,2\n";
    auto r = ingest_csv_text(sparse);
    CHECK(r.warnings.size() == 2);  // (x,T,b) and (y,T,a)
    CHECK(r.context.affinity(0, 0, 1) == 0);
    CHECK(r.context.affinity(1, 0, 0) == 0);
    CHECK_THROWS_AS(ingest_csv_text(sparse, {3, true}), InputError);
}

TEST_CASE("modalities as 1-based indices") {
    auto r = ingest_csv_text(
        "object,trait,modality,affinity\n"
        "x,T,1,1\n"
        "x,T,2,2\n"
        "y,T,1,3\n"
        "y,T,2,0\n");
    CHECK(r.context.traits()[0].modalities == std::vector<std::string>{"1", "2"});
    CHECK(r.context.affinity(1, 0, 0) == 3);

    // labels and indices may mix: index 1 refers to the first label
    auto mixed = ingest_csv_text(
        "object,trait,modality,affinity\n"
        "x,T,low,1\n"
        "y,T,1,2\n");
    CHECK(mixed.context.affinity(1, 0, 0) == 2);
    CHECK(mixed.context.traits()[0].modalities == std::vector<std::string>{"low"});

    CHECK_THROWS_WITH_AS(ingest_csv_text("object,trait,modality,affinity\nx,T,5,1\n"),
                         "line 2: modality index 5 out of range for trait T (has 0 modalities "
                         "so far)",
                         InputError);
}

TEST_CASE("row order permutations preserving first appearance yield identical contexts") {
    auto a = ingest_csv_text(kTwoPlantCsv);
    // reorder CALO's rows; every object/trait/modality first appearance
    // is unchanged (BERE's rows introduce all four modalities)
    std::string permuted =
        "object,trait,modality,affinity\n"
        "BERE,S,<0.08m,1\n"
        "BERE,S,0.08-0.3m,2\n"
        "BERE,S,0.3-1m,3\n"
        "BERE,S,1-5m,0\n"
        "CALO,S,1-5m,2\n"
        "CALO,S,0.3-1m,2\n"
        "CALO,S,<0.08m,0\n"
        "CALO,S,0.08-0.3m,1\n";
    auto b = ingest_csv_text(permuted);
    CHECK(a.context.objects() == b.context.objects());
    CHECK(a.context.traits()[0].modalities == b.context.traits()[0].modalities);
    for (std::size_t o = 0; o < 2; ++o)
        for (std::size_t m = 0; m < 4; ++m)
            CHECK(a.context.affinity(o, 0, m) == b.context.affinity(o, 0, m));
    CHECK(write_burmeister(disjunctive_scale(a.context)) ==
          write_burmeister(disjunctive_scale(b.context)));
}

TEST_CASE("json export is a canonical fixpoint") {
    auto mvc = ingest_csv_text(kTwoPlantCsv).context;
    auto ctx = disjunctive_scale(mvc);
    auto lat = build_lattice(ctx);

    ExportDocument doc;
    doc.context = summarize_context(ctx);
    doc.concepts = concept_records(ctx, lat.concepts);
    doc.covers = lat.covers;
    doc.implications = implication_records(ctx, dg_basis(ctx));
    doc.rules = rule_records(ctx, association_rules(ctx, lat, {0, {1, 2}}));
    doc.histogram_concepts =
        histogram_records(mvc, enumerate_histogram_concepts(mvc, HistogramMode::Union));

    std::string text = export_json(doc);
    ExportDocument parsed = parse_export_json(text);
    CHECK(export_json(parsed) == text);

    SUBCASE("confidence-1 rules serialize as equal num and den") {
        bool saw_certain = false;
        for (const auto& r : *parsed.rules) {
            if (r.confidence_num == r.confidence_den) saw_certain = true;
        }
        CHECK(saw_certain);
    }
    SUBCASE("concept arrays follow the canonical enumeration order") {
        REQUIRE(parsed.concepts->size() == lat.concepts.size());
        for (std::size_t i = 0; i < lat.concepts.size(); ++i)
            CHECK((*parsed.concepts)[i].intent == ctx.attribute_names(lat.concepts[i].intent));
    }
    SUBCASE("cover indices out of range are rejected") {
        ExportDocument bad;
        bad.concepts = std::vector<ExportDocument::ConceptRecord>{{{"x"}, {}}};
        bad.covers = std::vector<std::pair<std::size_t, std::size_t>>{{0, 7}};
        CHECK_THROWS_AS(parse_export_json(export_json(bad)), InputError);
    }
    SUBCASE("garbage is rejected") {
        CHECK_THROWS_AS(parse_export_json("not json"), InputError);
        CHECK_THROWS_AS(parse_export_json("{\"schema_version\": \"x\"}"), InputError);
    }
}

TEST_CASE("dot export uses reduced labeling") {
    auto ctx = disjunctive_scale(size_context());
    auto lat = build_lattice(ctx);
    std::string dot = export_dot(lat, ctx);

    // collect every token appearing in node labels
    std::map<std::string, int> label_tokens;
    std::size_t pos = 0;
    while ((pos = dot.find("label=\"", pos)) != std::string::npos) {
        pos += 7;
        std::size_t end = dot.find('"', pos);
        std::string label = dot.substr(pos, end - pos);
        std::size_t tok_start = 0;
        for (std::size_t i = 0; i <= label.size(); ++i) {
            bool at_break = i == label.size() || label[i] == ',' ||
                            (label[i] == '\\' && i + 1 < label.size() && label[i + 1] == 'n');
            if (at_break) {
                std::string tok = label.substr(tok_start, i - tok_start);
                while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
                if (!tok.empty() && tok != "n") ++label_tokens[tok];
                if (i < label.size() && label[i] == '\\') ++i;  // skip the n
                tok_start = i + 1;
            }
        }
        pos = end;
    }
    for (const auto& name : ctx.attributes()) CHECK(label_tokens[name] == 1);
    for (const auto& name : ctx.objects()) CHECK(label_tokens[name] == 1);

    SUBCASE("single concept gives one node and no edges") {
        BinaryContext trivial({"a"}, {}, {Bitset(0)});
        std::string d = export_dot(build_lattice(trivial), trivial);
        CHECK(d.find("c0") != std::string::npos);
        CHECK(d.find("->") == std::string::npos);
    }
    SUBCASE("3-chain gives a two-edge path") {
        auto chain = make_binary({"o1", "o2", "o3"}, {"a", "b", "c"}, {"X..", "XX.", "XXX"});
        std::string d = export_dot(build_lattice(chain), chain);
        std::size_t edges = 0;
        for (pos = 0; (pos = d.find("->", pos)) != std::string::npos; pos += 2) ++edges;
        CHECK(edges == 2);
    }
}
