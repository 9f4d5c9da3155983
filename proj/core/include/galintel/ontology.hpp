#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galintel/expr.hpp"

namespace galintel {

enum class ConceptKind { Variable, EmpiricalConstant, MathematicalConstant };

std::string to_string(ConceptKind kind);

struct Concept {
    std::string id;
    ConceptKind kind = ConceptKind::Variable;
    bool measurable = false;
    std::string grounding;
};

/// Externally declared ontology for one statement: concepts, symbol
/// bindings, auxiliary definitions and neutral operator names.
struct AnnotationSet {
    std::vector<Concept> concepts;
    std::map<std::string, std::string> bindings;  // surface symbol -> concept id
    AuxMap auxiliaries;
    std::set<std::string> operators;

    // soft problems recorded while decoding the file (unknown keys, bad
    // enum strings); surfaced by validate()
    std::vector<std::string> decode_issues;

    const Concept* find_concept(const std::string& id) const;
};

struct AnnotationFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AnnotationSet annotations_from_json(const nlohmann::json& doc);
AnnotationSet load_annotations(const std::filesystem::path& file);

struct Violation {
    std::string message;
};

/// Violations are data, not exceptions.
std::vector<Violation> validate(const AnnotationSet& annotations);

enum class LeafTag {
    VariableConcept,
    EmpiricalConstant,
    MathematicalConstant,
    NumericLiteral,
    NeutralOperator,
};

struct SymbolBinding {
    LeafTag tag;
    std::string concept_id;  // empty for NeutralOperator
};

struct UnboundSymbol : std::runtime_error {
    std::vector<std::string> symbols;
    explicit UnboundSymbol(std::vector<std::string> names);
};

/// Statement whose every leaf symbol (and applied function name) carries
/// exactly one tag. Expects auxiliaries to be inlined already.
struct BoundStatement {
    Statement statement;
    std::map<std::string, SymbolBinding> symbols;
    const AnnotationSet* annotations = nullptr;

    const SymbolBinding& binding_of(const std::string& symbol) const;
};

BoundStatement bind_symbols(const Statement& stmt, const AnnotationSet& annotations);

enum class StatementRegion {
    QuantitativeFact,
    PureMathematical,
    OntologicalNonEmpirical,
    EmpiricalMathematical,
};

std::string to_string(StatementRegion region);

StatementRegion classify_statement(const BoundStatement& bound);

}  // namespace galintel
