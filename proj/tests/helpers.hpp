#pragma once

#include <string>
#include <vector>

#include "galintel/intelligibility.hpp"
#include "galintel/ontology.hpp"

namespace galintel::testing {

struct ConceptSpec {
    std::string symbol;
    ConceptKind kind;
    bool measurable = true;
};

/// Annotation set where each listed symbol binds to a concept of the same
/// name. Variables default to measurable, constants to non-measurable.
inline AnnotationSet simple_annotations(const std::vector<ConceptSpec>& specs,
                                        const std::vector<std::string>& operators = {}) {
    AnnotationSet set;
    for (const auto& s : specs) {
        const bool measurable = s.kind == ConceptKind::Variable && s.measurable;
        set.concepts.push_back({s.symbol, s.kind, measurable, "test concept"});
        set.bindings[s.symbol] = s.symbol;
    }
    for (const auto& op : operators) set.operators.insert(op);
    return set;
}

inline AnalysisResult score_text(const std::string& source, const AnnotationSet& annotations) {
    return score_statement(parse_statement(source), annotations);
}

}  // namespace galintel::testing
