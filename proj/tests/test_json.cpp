#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "simpconf/errors.hpp"
#include "simpconf/json_io.hpp"

using namespace simpconf;
using namespace simpconf::testing;

TEST_CASE("label json forms") {
    CHECK(label_from_json(json("v")) == A("v"));
    CHECK(label_from_json(json(7)) == A("7"));
    CHECK(label_from_json(json::parse(R"(["a","b"])")) == VertexLabel::tuple({A("a"), A("b")}));
    CHECK(label_from_json(json::parse(R"({"bary":["b","a"]})")) ==
          VertexLabel::bary({A("a"), A("b")}));
    CHECK(label_from_json(json::parse(R"({"orbit":["a"]})")) == VertexLabel::orbit({A("a")}));
    CHECK(label_from_json(json("(a,b)")) == VertexLabel::tuple({A("a"), A("b")}));
    CHECK_THROWS_AS(label_from_json(json::parse(R"({"x":1})")), SchemaError);
}

TEST_CASE("complex documents round-trip exactly") {
    std::vector<SimplicialComplex> samples = {
        bd_delta2(), delta2(), sd_triangle(), point(),
        ordered_power(bd_delta2(), 2),
        barycentric_subdivision(path3()),
        conf_model(bd_delta2(), 2),
        quotient_complex(SimplicialAction::trivial(path3())).complex};
    for (const auto& k : samples) {
        json doc = complex_to_json(k);
        SimplicialComplex back = complex_from_json(doc);
        CHECK(back == k);
        CHECK(complex_to_json(back) == doc);
    }
}

TEST_CASE("document validation diagnostics") {
    DocumentCheck ok = validate_complex_document(
        json::parse(R"({"vertices":["0","1","2"],"facets":[["0","1"],["0","2"],["1","2"]]})"));
    CHECK(ok.ok());
    CHECK(ok.diagnostics.empty());

    DocumentCheck unknown = validate_complex_document(
        json::parse(R"({"vertices":["0","1"],"facets":[["0","7"]]})"));
    CHECK_FALSE(unknown.ok());
    REQUIRE(unknown.diagnostics.size() == 1);
    CHECK(unknown.diagnostics[0].severity == "error");
    CHECK(unknown.diagnostics[0].message.find("7") != std::string::npos);

    // explicit simplex family missing a face: closure warning naming it
    DocumentCheck open = validate_complex_document(
        json::parse(R"({"vertices":["0","1","2"],"simplices":[["0","1","2"],["0","1"]]})"));
    CHECK(open.ok());
    CHECK_FALSE(open.diagnostics.empty());
    bool names_missing_edge = false;
    for (const auto& d : open.diagnostics) {
        CHECK(d.severity == "warning");
        if (d.message.find("{0,2}") != std::string::npos) names_missing_edge = true;
    }
    CHECK(names_missing_edge);

    DocumentCheck shape = validate_complex_document(json::parse(R"({"vertices":[]})"));
    CHECK_FALSE(shape.ok());
}

TEST_CASE("action documents") {
    SimplicialComplex k = bd_delta2();
    json doc = json::parse(R"({"generators":[{"map":{"0":"1","1":"2","2":"0"}}]})");
    auto gens = generators_from_json(k, doc);
    REQUIRE(gens.size() == 1);
    SimplicialAction act = SimplicialAction::from_generators(k, gens);
    CHECK(act.size() == 3);

    CHECK_THROWS_AS(
        generators_from_json(k, json::parse(R"({"generators":[{"map":{"0":"9"}}]})")),
        SchemaError);
    CHECK_THROWS_AS(generators_from_json(k, json::parse(R"({})")), SchemaError);
}

TEST_CASE("profile and orbit emission") {
    HomologyProfile p = homology_profile(rp2_six());
    json j = profile_to_json(p);
    CHECK(j["betti"] == json::parse("[1,0,0]"));
    CHECK(j["torsion"] == json::parse("[[],[2],[]]"));
    CHECK(j["euler"] == 1);

    SimplicialAction s2 = symmetric_group_action(bd_delta2(), 2);
    json orbits = orbits_to_json(s2, 0);
    CHECK(orbits["dim"] == 0);
    CHECK(orbits["orbits"].size() == 6);  // 3 diagonal fixed points + 3 swapped pairs

    QuotientResult q = quotient_complex(SimplicialAction::trivial(path3()));
    json qj = quotient_to_json(SimplicialAction::trivial(path3()), q);
    CHECK(qj["projection"]["0"] == "[0]");
}
