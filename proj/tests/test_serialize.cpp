#include <doctest.h>

#include "rht/fleet.hpp"
#include "rht/ls.hpp"
#include "rht/serialize.hpp"
#include "support.hpp"

using namespace rht;

namespace {

bool same(const DGLPresentation& a, const DGLPresentation& b) {
    return a.W() == b.W() && a.alph.gens == b.alph.gens && a.diff == b.diff;
}

bool same(const LInfinityMorphism& a, const LInfinityMorphism& b) {
    return a.source == b.source && a.target == b.target && a.comps == b.comps;
}

bool same(const AlgebraMap& a, const AlgebraMap& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.images == b.images;
}

}  // namespace

TEST_CASE("LS algebra round-trips") {
    for (int W : {2, 4}) {
        auto D = build_ls(W);
        std::string text = export_object(D);
        CHECK(same(import_object<DGLPresentation>(text), D));
        CHECK(export_object(import_object<DGLPresentation>(text)) == text);
        CHECK(export_object(build_ls(W)) == text);
    }
}

TEST_CASE("bracket tables and morphisms round-trip") {
    for (const auto& m : build_fleet(testing::test_seed(), 8)) {
        CHECK(import_object<LInfinityAlgebra>(export_object(m.L)) == m.L);
        CHECK(same(import_object<LInfinityMorphism>(export_object(m.iso)), m.iso));
        auto C = cochains(m.L, 4);
        CHECK(import_object<FreeCDGA>(export_object(C)) == C);
        auto f = cochains_of_morphism(m.iso, 4);
        CHECK(same(import_object<AlgebraMap>(export_object(f)), f));
    }
    auto C = interval_coalgebra(4);
    auto back = import_object<AInfinityCoalgebra>(export_object(C));
    CHECK(back.basis == C.basis);
    CHECK(back.delta == C.delta);
}

TEST_CASE("empty algebra is a minimal document") {
    LInfinityAlgebra L;
    auto doc = Json::parse(export_object(L));
    CHECK(doc["version"] == kSchemaVersion);
    CHECK(doc["kind"] == "linfty-algebra");
    CHECK(doc["data"]["basis"].empty());
    CHECK(import_object<LInfinityAlgebra>(export_object(L)) == L);
}

TEST_CASE("scalars are p/q strings") {
    auto doc = Json::parse(export_object(lib_u()));
    auto entry = doc["data"]["brackets"]["1"][0];
    CHECK(entry["args"] == Json::array({"u"}));
    CHECK(entry["value"][0]["coeff"] == "-1/2");
    CHECK(entry["value"][0]["name"] == "w");
    CHECK(export_object(lib_u()).find('.') == std::string::npos);
}

TEST_CASE("Lie-expression terms in a DGL document") {
    std::string text = R"({"format": "rht", "version": 1, "kind": "dgl", "data": {
        "truncation": 3,
        "generators": [{"name": "a", "degree": -1}, {"name": "x", "degree": 0}],
        "differential": {"a": [{"coeff": "-1/2", "lie": ["a", "a"]}], "x": [{"coeff": "1", "word": ["a"]}]}}})";
    auto D = import_object<DGLPresentation>(text);
    CHECK(D.diff[0] == scaled(bracket(D.alph, gen(0), gen(0)), frac(-1, 2)));
    CHECK(D.diff[1] == gen(0));
    CHECK(D.diff[0].size() == 1);
}

TEST_CASE("schema errors") {
    std::string text = export_object(lib_u());
    auto doc = Json::parse(text);
    doc["version"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(import_object<LInfinityAlgebra>(doc.dump()), SchemaError);
    CHECK_THROWS_AS(import_object<DGLPresentation>(text), SchemaError);
    CHECK_THROWS_AS(import_object<LInfinityAlgebra>("{not json"), SchemaError);
    doc = Json::parse(text);
    doc["data"]["brackets"]["1"][0]["value"][0]["coeff"] = 0.5;
    CHECK_THROWS_AS(import_object<LInfinityAlgebra>(doc.dump()), SchemaError);
    doc = Json::parse(text);
    doc["data"]["brackets"]["1"][0]["value"][0]["name"] = "u";
    CHECK_THROWS_AS(import_object<LInfinityAlgebra>(doc.dump()), SchemaError);
    doc = Json::parse(text);
    doc["data"]["brackets"]["1"][0]["value"][0]["name"] = "nobody";
    CHECK_THROWS_AS(import_object<LInfinityAlgebra>(doc.dump()), SchemaError);
}
