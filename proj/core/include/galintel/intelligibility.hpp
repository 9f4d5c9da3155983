#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "galintel/ontology.hpp"
#include "galintel/rational.hpp"

namespace galintel {

// ---------------------------------------------------------------------------
// Canonical form: associative-commutative flattening of +/- chains into
// n-ary sums and */÷ chains into n-ary products with ±1 exponent signs.
// Signs of terms are dropped; they never affect constant counting.
// ---------------------------------------------------------------------------

struct Canon;
using CanonPtr = std::shared_ptr<const Canon>;

struct CanonSum {
    std::vector<CanonPtr> terms;
};

struct CanonProduct {
    struct Factor {
        CanonPtr node;
        int exponent_sign = 1;  // +1 factor, -1 reciprocal
    };
    std::vector<Factor> factors;
};

struct CanonPow {
    CanonPtr base;
    CanonPtr exponent;
};

struct CanonLeaf {
    ExprPtr leaf;  // NumberLit or SymbolRef
};

struct CanonCall {
    std::string name;
    std::vector<CanonPtr> args;
};

struct Canon {
    std::variant<CanonSum, CanonProduct, CanonPow, CanonLeaf, CanonCall> node;
};

CanonPtr canonicalize(const ExprPtr& expr);

/// Debug rendering of the canonical form, e.g. "sum(x, prod(C_mu, 1/sigma))".
std::string render_canonical(const Canon& canon);

// ---------------------------------------------------------------------------
// Constant fusion and scoring
// ---------------------------------------------------------------------------

/// One maximal cluster of algebraically combinable empirical constants,
/// identified by its set of member concept ids.
struct FusedConstantGroup {
    std::set<std::string> members;

    bool operator==(const FusedConstantGroup&) const = default;
    bool operator<(const FusedConstantGroup& other) const { return members < other.members; }
};

std::vector<FusedConstantGroup> fuse_constants(const BoundStatement& bound);

struct AnalysisResult {
    int n_o = 0;
    int n_e = 0;
    Rational score;  // 1 - N_E/N_O, exact
    std::set<std::string> variable_concepts;
    std::vector<FusedConstantGroup> groups;
    StatementRegion region = StatementRegion::PureMathematical;
    std::vector<std::string> warnings;
};

struct AnnotationInvalid : std::runtime_error {
    std::vector<Violation> violations;
    explicit AnnotationInvalid(std::vector<Violation> v);
};

struct ZeroVariables : std::runtime_error {
    ZeroVariables() : std::runtime_error("I is undefined at N_O = 0") {}
};

/// Full pipeline: validate annotations, inline auxiliaries, bind, classify,
/// fuse, count. Throws AnnotationInvalid, UnboundSymbol or ZeroVariables.
AnalysisResult score_statement(const Statement& stmt, const AnnotationSet& annotations);

/// Counting step alone, for callers that already hold a bound statement.
AnalysisResult score_bound(const BoundStatement& bound);

nlohmann::json analysis_to_json(const AnalysisResult& result, const std::string& name);

enum class ComparisonVerdict { FirstMoreTransparent, SecondMoreTransparent, NotSignificant };

std::string to_string(ComparisonVerdict verdict);

/// ±1 robustness comparison over the full {-1,0,+1}² x {-1,0,+1}² grid,
/// with counts clamped to N_E >= 0 and N_O >= 1.
ComparisonVerdict significantly_different(const AnalysisResult& a, const AnalysisResult& b);

}  // namespace galintel
