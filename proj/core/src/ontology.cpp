#include "galintel/ontology.hpp"

#include <algorithm>
#include <fstream>

namespace galintel {

std::string to_string(ConceptKind kind) {
    switch (kind) {
        case ConceptKind::Variable: return "variable";
        case ConceptKind::EmpiricalConstant: return "empirical_constant";
        case ConceptKind::MathematicalConstant: return "mathematical_constant";
    }
    return "?";
}

const Concept* AnnotationSet::find_concept(const std::string& id) const {
    for (const auto& c : concepts) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

namespace {

std::optional<ConceptKind> kind_from_string(const std::string& s) {
    if (s == "variable") return ConceptKind::Variable;
    if (s == "empirical_constant") return ConceptKind::EmpiricalConstant;
    if (s == "mathematical_constant") return ConceptKind::MathematicalConstant;
    return std::nullopt;
}

void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                const std::string& where, std::vector<std::string>& issues) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&key](const char* a) { return key == a; }) == allowed.end()) {
            issues.push_back("unknown key '" + key + "' in " + where);
        }
    }
}

}  // namespace

AnnotationSet annotations_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw AnnotationFormatError("annotation file must be a JSON object");
    }
    AnnotationSet set;
    check_keys(doc, {"concepts", "bindings", "auxiliaries", "operators"}, "annotation file",
               set.decode_issues);

    for (const auto& c : doc.value("concepts", nlohmann::json::array())) {
        if (!c.is_object()) {
            throw AnnotationFormatError("concept entries must be objects");
        }
        check_keys(c, {"id", "kind", "measurable", "grounding"}, "concept", set.decode_issues);
        Concept entry;
        entry.id = c.value("id", "");
        entry.measurable = c.value("measurable", false);
        entry.grounding = c.value("grounding", "");
        const std::string kind = c.value("kind", "");
        if (auto k = kind_from_string(kind)) {
            entry.kind = *k;
        } else {
            set.decode_issues.push_back("concept '" + entry.id + "' has unknown kind '" + kind + "'");
        }
        set.concepts.push_back(std::move(entry));
    }

    for (const auto& b : doc.value("bindings", nlohmann::json::array())) {
        check_keys(b, {"symbol", "concept"}, "binding", set.decode_issues);
        const std::string symbol = b.value("symbol", "");
        if (set.bindings.count(symbol)) {
            set.decode_issues.push_back("duplicate binding for symbol '" + symbol + "'");
            continue;
        }
        set.bindings[symbol] = b.value("concept", "");
    }

    for (const auto& a : doc.value("auxiliaries", nlohmann::json::array())) {
        check_keys(a, {"symbol", "definition"}, "auxiliary", set.decode_issues);
        const std::string symbol = a.value("symbol", "");
        if (set.auxiliaries.count(symbol)) {
            set.decode_issues.push_back("duplicate auxiliary for symbol '" + symbol + "'");
            continue;
        }
        set.auxiliaries[symbol] = a.value("definition", "");
    }

    for (const auto& op : doc.value("operators", nlohmann::json::array())) {
        set.operators.insert(op.get<std::string>());
    }
    return set;
}

AnnotationSet load_annotations(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::ios_base::failure("cannot open annotation file: " + file.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw AnnotationFormatError(file.string() + ": " + e.what());
    }
    return annotations_from_json(doc);
}

std::vector<Violation> validate(const AnnotationSet& annotations) {
    std::vector<Violation> out;
    for (const auto& issue : annotations.decode_issues) {
        out.push_back({issue});
    }

    std::set<std::string> concept_ids;
    for (const auto& c : annotations.concepts) {
        if (!concept_ids.insert(c.id).second) {
            out.push_back({"duplicate concept id '" + c.id + "'"});
        }
        if (c.kind == ConceptKind::MathematicalConstant && c.measurable) {
            out.push_back({"mathematical constant '" + c.id + "' cannot be measurable"});
        }
    }

    for (const auto& [symbol, concept_id] : annotations.bindings) {
        if (!concept_ids.count(concept_id)) {
            out.push_back({"dangling concept id '" + concept_id + "' bound by symbol '" + symbol + "'"});
        }
    }

    // bindings, auxiliaries and operators must be pairwise disjoint
    for (const auto& [symbol, _] : annotations.auxiliaries) {
        if (annotations.bindings.count(symbol)) {
            out.push_back({"symbol '" + symbol + "' declared as both binding and auxiliary"});
        }
        if (annotations.operators.count(symbol)) {
            out.push_back({"symbol '" + symbol + "' declared as both auxiliary and operator"});
        }
    }
    for (const auto& [symbol, _] : annotations.bindings) {
        if (annotations.operators.count(symbol)) {
            out.push_back({"symbol '" + symbol + "' declared as both binding and operator"});
        }
    }

    // auxiliary definitions must parse and be acyclic
    bool all_parse = true;
    for (const auto& [symbol, definition] : annotations.auxiliaries) {
        try {
            parse_expression(definition);
        } catch (const ParseError& e) {
            all_parse = false;
            out.push_back({"auxiliary '" + symbol + "' does not parse: " + e.what()});
        }
    }
    if (all_parse && !annotations.auxiliaries.empty()) {
        try {
            Statement probe;
            probe.lhs = make_symbol("_probe");
            std::vector<ExprPtr> uses;
            for (const auto& [symbol, _] : annotations.auxiliaries) {
                uses.push_back(make_symbol(symbol));
            }
            ExprPtr rhs = uses.front();
            for (std::size_t i = 1; i < uses.size(); ++i) {
                rhs = make_binary(BinaryOp::Add, rhs, uses[i]);
            }
            probe.rhs = rhs;
            inline_auxiliaries(probe, annotations.auxiliaries);
        } catch (const CycleError& e) {
            out.push_back({std::string(e.what())});
        }
    }
    return out;
}

UnboundSymbol::UnboundSymbol(std::vector<std::string> names)
    : std::runtime_error([&names] {
          std::string msg = "unbound symbol(s):";
          for (const auto& n : names) msg += " " + n;
          return msg;
      }()),
      symbols(std::move(names)) {}

const SymbolBinding& BoundStatement::binding_of(const std::string& symbol) const {
    return symbols.at(symbol);
}

BoundStatement bind_symbols(const Statement& stmt, const AnnotationSet& annotations) {
    const SymbolSets names = free_symbols(stmt);
    BoundStatement bound;
    bound.statement = stmt;
    bound.annotations = &annotations;

    std::vector<std::string> unresolved;
    auto resolve = [&](const std::string& name, bool is_function) {
        if (is_function && annotations.operators.count(name)) {
            bound.symbols[name] = {LeafTag::NeutralOperator, ""};
            return;
        }
        auto it = annotations.bindings.find(name);
        if (it == annotations.bindings.end()) {
            unresolved.push_back(name);
            return;
        }
        const Concept* entry = annotations.find_concept(it->second);
        if (entry == nullptr) {
            unresolved.push_back(name);
            return;
        }
        LeafTag tag = LeafTag::VariableConcept;
        switch (entry->kind) {
            case ConceptKind::Variable: tag = LeafTag::VariableConcept; break;
            case ConceptKind::EmpiricalConstant: tag = LeafTag::EmpiricalConstant; break;
            case ConceptKind::MathematicalConstant: tag = LeafTag::MathematicalConstant; break;
        }
        bound.symbols[name] = {tag, entry->id};
    };

    for (const auto& name : names.symbols) resolve(name, false);
    for (const auto& name : names.functions) resolve(name, true);

    if (!unresolved.empty()) {
        std::sort(unresolved.begin(), unresolved.end());
        throw UnboundSymbol(std::move(unresolved));
    }
    return bound;
}

std::string to_string(StatementRegion region) {
    switch (region) {
        case StatementRegion::QuantitativeFact: return "QuantitativeFact";
        case StatementRegion::PureMathematical: return "PureMathematical";
        case StatementRegion::OntologicalNonEmpirical: return "OntologicalNonEmpirical";
        case StatementRegion::EmpiricalMathematical: return "EmpiricalMathematical";
    }
    return "?";
}

namespace {

struct LeafSurvey {
    std::set<std::string> grounded_concepts;             // any grounded kind
    std::set<std::string> measurable_variable_concepts;  // kind=variable, measurable
    bool only_numeric_or_mathematical = true;
};

void survey(const Expr& e, const BoundStatement& bound, LeafSurvey& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SymbolRef>) {
                const SymbolBinding& b = bound.binding_of(node.name);
                if (b.tag == LeafTag::VariableConcept || b.tag == LeafTag::EmpiricalConstant) {
                    out.grounded_concepts.insert(b.concept_id);
                    out.only_numeric_or_mathematical = false;
                    if (b.tag == LeafTag::VariableConcept && bound.annotations != nullptr) {
                        const Concept* c = bound.annotations->find_concept(b.concept_id);
                        if (c != nullptr && c->measurable) {
                            out.measurable_variable_concepts.insert(c->id);
                        }
                    }
                } else if (b.tag != LeafTag::MathematicalConstant) {
                    out.only_numeric_or_mathematical = false;
                }
            } else if constexpr (std::is_same_v<T, Negate>) {
                survey(*node.child, bound, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                survey(*node.lhs, bound, out);
                survey(*node.rhs, bound, out);
            } else if constexpr (std::is_same_v<T, Call>) {
                for (const auto& arg : node.args) survey(*arg, bound, out);
            }
        },
        e.node);
}

bool is_single_measurable_symbol(const Expr& e, const BoundStatement& bound) {
    const auto* sym = std::get_if<SymbolRef>(&e.node);
    if (sym == nullptr) return false;
    const SymbolBinding& b = bound.binding_of(sym->name);
    if (b.tag != LeafTag::VariableConcept) return false;
    const Concept* c = bound.annotations->find_concept(b.concept_id);
    return c != nullptr && c->measurable;
}

}  // namespace

StatementRegion classify_statement(const BoundStatement& bound) {
    LeafSurvey all;
    survey(*bound.statement.lhs, bound, all);
    survey(*bound.statement.rhs, bound, all);

    if (all.grounded_concepts.empty()) {
        return StatementRegion::PureMathematical;
    }

    LeafSurvey lhs, rhs;
    survey(*bound.statement.lhs, bound, lhs);
    survey(*bound.statement.rhs, bound, rhs);
    const bool quantitative =
        (is_single_measurable_symbol(*bound.statement.lhs, bound) && rhs.only_numeric_or_mathematical) ||
        (is_single_measurable_symbol(*bound.statement.rhs, bound) && lhs.only_numeric_or_mathematical);
    if (quantitative) {
        return StatementRegion::QuantitativeFact;
    }

    if (all.measurable_variable_concepts.size() >= 2) {
        return StatementRegion::EmpiricalMathematical;
    }
    return StatementRegion::OntologicalNonEmpirical;
}

}  // namespace galintel
