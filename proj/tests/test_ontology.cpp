#include "doctest.h"

#include <nlohmann/json.hpp>

#include "galintel/ontology.hpp"
#include "helpers.hpp"

using namespace galintel;
using galintel::testing::simple_annotations;
using nlohmann::json;

namespace {

json minimal_doc() {
    return json{
        {"concepts",
         {{{"id", "force"}, {"kind", "variable"}, {"measurable", true}, {"grounding", "net force"}},
          {{"id", "g_const"},
           {"kind", "empirical_constant"},
           {"measurable", false},
           {"grounding", "measured"}}}},
        {"bindings", {{{"symbol", "F"}, {"concept", "force"}}, {{"symbol", "G"}, {"concept", "g_const"}}}},
        {"auxiliaries", json::array()},
        {"operators", json::array()},
    };
}

}  // namespace

TEST_CASE("decoding a well-formed annotation file") {
    const AnnotationSet set = annotations_from_json(minimal_doc());
    CHECK(set.concepts.size() == 2);
    CHECK(set.bindings.at("F") == "force");
    CHECK(set.find_concept("g_const")->kind == ConceptKind::EmpiricalConstant);
    CHECK(set.find_concept("missing") == nullptr);
    CHECK(validate(set).empty());
}

TEST_CASE("unknown keys are validation violations, not crashes") {
    json doc = minimal_doc();
    doc["concepts"][0]["color"] = "red";
    doc["surprise"] = 1;
    const AnnotationSet set = annotations_from_json(doc);
    CHECK_FALSE(validate(set).empty());
}

TEST_CASE("validation rejects inconsistent sets") {
    SUBCASE("duplicate concept ids") {
        json doc = minimal_doc();
        doc["concepts"].push_back(doc["concepts"][0]);
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
    SUBCASE("measurable mathematical constant") {
        json doc = minimal_doc();
        doc["concepts"].push_back(
            {{"id", "pi"}, {"kind", "mathematical_constant"}, {"measurable", true}, {"grounding", ""}});
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
    SUBCASE("binding to a missing concept") {
        json doc = minimal_doc();
        doc["bindings"].push_back({{"symbol", "q"}, {"concept", "nowhere"}});
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
    SUBCASE("symbol present in two roles") {
        json doc = minimal_doc();
        doc["operators"].push_back("F");
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
    SUBCASE("auxiliary that does not parse") {
        json doc = minimal_doc();
        doc["auxiliaries"].push_back({{"symbol", "w"}, {"definition", "G +"}});
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
    SUBCASE("cyclic auxiliaries") {
        json doc = minimal_doc();
        doc["auxiliaries"].push_back({{"symbol", "p"}, {"definition", "q + 1"}});
        doc["auxiliaries"].push_back({{"symbol", "q"}, {"definition", "p + 1"}});
        CHECK_FALSE(validate(annotations_from_json(doc)).empty());
    }
}

TEST_CASE("binding resolves every leaf or reports all misses") {
    const AnnotationSet set = annotations_from_json(minimal_doc());
    const BoundStatement bound = bind_symbols(parse_statement("F = G*2"), set);
    CHECK(bound.binding_of("F").tag == LeafTag::VariableConcept);
    CHECK(bound.binding_of("G").tag == LeafTag::EmpiricalConstant);

    try {
        bind_symbols(parse_statement("F = w*v + G"), set);
        FAIL("expected UnboundSymbol");
    } catch (const UnboundSymbol& e) {
        CHECK(e.symbols == std::vector<std::string>{"v", "w"});  // sorted, complete
    }
}

TEST_CASE("operators bind applied function names") {
    auto set = simple_annotations({{"u", ConceptKind::Variable}, {"t", ConceptKind::Variable}}, {"D"});
    CHECK_NOTHROW(bind_symbols(parse_statement("u = D(u, t)"), set));
    CHECK_THROWS_AS(bind_symbols(parse_statement("u = Q(u, t)"), set), UnboundSymbol);
}

TEST_CASE("classification covers the four regions") {
    SUBCASE("pure mathematical") {
        auto set = simple_annotations({{"x", ConceptKind::MathematicalConstant},
                                       {"y", ConceptKind::MathematicalConstant}});
        CHECK(classify_statement(bind_symbols(parse_statement("x = y^2"), set)) ==
              StatementRegion::PureMathematical);
    }
    SUBCASE("quantitative fact") {
        auto set = simple_annotations({{"c", ConceptKind::Variable}, {"pi", ConceptKind::MathematicalConstant}});
        CHECK(classify_statement(bind_symbols(parse_statement("c = 299792458"), set)) ==
              StatementRegion::QuantitativeFact);
        CHECK(classify_statement(bind_symbols(parse_statement("2*pi = c"), set)) ==
              StatementRegion::QuantitativeFact);
    }
    SUBCASE("ontological but not empirical") {
        auto set = simple_annotations({{"L", ConceptKind::Variable, false},
                                       {"N", ConceptKind::Variable, false},
                                       {"f_c", ConceptKind::EmpiricalConstant}});
        CHECK(classify_statement(bind_symbols(parse_statement("L = f_c*N"), set)) ==
              StatementRegion::OntologicalNonEmpirical);
    }
    SUBCASE("empirical mathematical") {
        auto set = simple_annotations({{"F", ConceptKind::Variable},
                                       {"m", ConceptKind::Variable},
                                       {"a", ConceptKind::Variable}});
        CHECK(classify_statement(bind_symbols(parse_statement("F = m*a"), set)) ==
              StatementRegion::EmpiricalMathematical);
    }
}
