#include "galintel/intelligibility.hpp"

#include <algorithm>
#include <sstream>

namespace galintel {

// ---------------------------------------------------------------------------
// Canonicalization
// ---------------------------------------------------------------------------

namespace {

CanonPtr make_canon(Canon c) { return std::make_shared<Canon>(std::move(c)); }

void collect_terms(const ExprPtr& e, std::vector<CanonPtr>& terms);
void collect_factors(const ExprPtr& e, int sign, std::vector<CanonProduct::Factor>& factors);

CanonPtr canon_of(const ExprPtr& e) {
    return std::visit(
        [&](const auto& node) -> CanonPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NumberLit> || std::is_same_v<T, SymbolRef>) {
                return make_canon(Canon{CanonLeaf{e}});
            } else if constexpr (std::is_same_v<T, Negate>) {
                return canon_of(node.child);  // signs never affect counting
            } else if constexpr (std::is_same_v<T, Binary>) {
                switch (node.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub: {
                        std::vector<CanonPtr> terms;
                        collect_terms(e, terms);
                        if (terms.size() == 1) return terms.front();
                        return make_canon(Canon{CanonSum{std::move(terms)}});
                    }
                    case BinaryOp::Mul:
                    case BinaryOp::Div: {
                        std::vector<CanonProduct::Factor> factors;
                        collect_factors(e, 1, factors);
                        if (factors.size() == 1 && factors.front().exponent_sign == 1) {
                            return factors.front().node;
                        }
                        return make_canon(Canon{CanonProduct{std::move(factors)}});
                    }
                    case BinaryOp::Pow:
                        return make_canon(Canon{CanonPow{canon_of(node.lhs), canon_of(node.rhs)}});
                }
                return nullptr;
            } else {
                const auto& call = std::get<Call>(e->node);
                std::vector<CanonPtr> args;
                args.reserve(call.args.size());
                for (const auto& a : call.args) args.push_back(canon_of(a));
                return make_canon(Canon{CanonCall{call.name, std::move(args)}});
            }
        },
        e->node);
}

void collect_terms(const ExprPtr& e, std::vector<CanonPtr>& terms) {
    if (const auto* neg = std::get_if<Negate>(&e->node)) {
        collect_terms(neg->child, terms);
        return;
    }
    if (const auto* bin = std::get_if<Binary>(&e->node)) {
        if (bin->op == BinaryOp::Add || bin->op == BinaryOp::Sub) {
            collect_terms(bin->lhs, terms);
            collect_terms(bin->rhs, terms);
            return;
        }
    }
    CanonPtr c = canon_of(e);
    if (const auto* sum = std::get_if<CanonSum>(&c->node)) {
        terms.insert(terms.end(), sum->terms.begin(), sum->terms.end());
    } else {
        terms.push_back(std::move(c));
    }
}

void collect_factors(const ExprPtr& e, int sign, std::vector<CanonProduct::Factor>& factors) {
    if (const auto* neg = std::get_if<Negate>(&e->node)) {
        collect_factors(neg->child, sign, factors);
        return;
    }
    if (const auto* bin = std::get_if<Binary>(&e->node)) {
        if (bin->op == BinaryOp::Mul) {
            collect_factors(bin->lhs, sign, factors);
            collect_factors(bin->rhs, sign, factors);
            return;
        }
        if (bin->op == BinaryOp::Div) {
            collect_factors(bin->lhs, sign, factors);
            collect_factors(bin->rhs, -sign, factors);
            return;
        }
    }
    CanonPtr c = canon_of(e);
    if (const auto* prod = std::get_if<CanonProduct>(&c->node)) {
        for (const auto& f : prod->factors) {
            factors.push_back({f.node, f.exponent_sign * sign});
        }
    } else {
        factors.push_back({std::move(c), sign});
    }
}

}  // namespace

CanonPtr canonicalize(const ExprPtr& expr) { return canon_of(expr); }

std::string render_canonical(const Canon& canon) {
    std::ostringstream out;
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CanonSum>) {
                out << "sum(";
                for (std::size_t i = 0; i < node.terms.size(); ++i) {
                    if (i > 0) out << ", ";
                    out << render_canonical(*node.terms[i]);
                }
                out << ')';
            } else if constexpr (std::is_same_v<T, CanonProduct>) {
                out << "prod(";
                for (std::size_t i = 0; i < node.factors.size(); ++i) {
                    if (i > 0) out << ", ";
                    if (node.factors[i].exponent_sign < 0) out << "1/";
                    out << render_canonical(*node.factors[i].node);
                }
                out << ')';
            } else if constexpr (std::is_same_v<T, CanonPow>) {
                out << "pow(" << render_canonical(*node.base) << ", "
                    << render_canonical(*node.exponent) << ')';
            } else if constexpr (std::is_same_v<T, CanonLeaf>) {
                out << render(*node.leaf);
            } else if constexpr (std::is_same_v<T, CanonCall>) {
                out << node.name << '(';
                for (std::size_t i = 0; i < node.args.size(); ++i) {
                    if (i > 0) out << ", ";
                    out << render_canonical(*node.args[i]);
                }
                out << ')';
            }
        },
        canon.node);
    return out.str();
}

// ---------------------------------------------------------------------------
// Constant fusion
// ---------------------------------------------------------------------------

namespace {

bool constant_pure(const Canon& c, const BoundStatement& bound) {
    return std::visit(
        [&](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CanonLeaf>) {
                if (std::holds_alternative<NumberLit>(node.leaf->node)) return true;
                const auto& sym = std::get<SymbolRef>(node.leaf->node);
                const LeafTag tag = bound.binding_of(sym.name).tag;
                return tag == LeafTag::EmpiricalConstant || tag == LeafTag::MathematicalConstant;
            } else if constexpr (std::is_same_v<T, CanonSum>) {
                return std::all_of(node.terms.begin(), node.terms.end(),
                                   [&](const CanonPtr& t) { return constant_pure(*t, bound); });
            } else if constexpr (std::is_same_v<T, CanonProduct>) {
                return std::all_of(node.factors.begin(), node.factors.end(),
                                   [&](const auto& f) { return constant_pure(*f.node, bound); });
            } else if constexpr (std::is_same_v<T, CanonPow>) {
                return constant_pure(*node.base, bound) && constant_pure(*node.exponent, bound);
            } else {
                return std::all_of(node.args.begin(), node.args.end(),
                                   [&](const CanonPtr& a) { return constant_pure(*a, bound); });
            }
        },
        c.node);
}

void empirical_members(const Canon& c, const BoundStatement& bound, std::set<std::string>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, CanonLeaf>) {
                if (const auto* sym = std::get_if<SymbolRef>(&node.leaf->node)) {
                    const SymbolBinding& b = bound.binding_of(sym->name);
                    if (b.tag == LeafTag::EmpiricalConstant) out.insert(b.concept_id);
                }
            } else if constexpr (std::is_same_v<T, CanonSum>) {
                for (const auto& t : node.terms) empirical_members(*t, bound, out);
            } else if constexpr (std::is_same_v<T, CanonProduct>) {
                for (const auto& f : node.factors) empirical_members(*f.node, bound, out);
            } else if constexpr (std::is_same_v<T, CanonPow>) {
                empirical_members(*node.base, bound, out);
                empirical_members(*node.exponent, bound, out);
            } else {
                for (const auto& a : node.args) empirical_members(*a, bound, out);
            }
        },
        c.node);
}

class GroupCollector {
public:
    explicit GroupCollector(const BoundStatement& bound) : bound_(bound) {}

    void side(const CanonPtr& root) {
        if (constant_pure(*root, bound_)) {
            add_cluster(*root);
        } else {
            walk(*root);
        }
    }

    std::set<std::set<std::string>> take() { return std::move(groups_); }

private:
    void add_cluster(const Canon& c) {
        std::set<std::string> members;
        empirical_members(c, bound_, members);
        if (!members.empty()) groups_.insert(std::move(members));
    }

    // merge every constant-pure child of one n-ary node into a single cluster
    template <typename It, typename Get>
    void children(It begin, It end, Get get) {
        std::set<std::string> merged;
        for (It it = begin; it != end; ++it) {
            const Canon& child = *get(*it);
            if (constant_pure(child, bound_)) {
                empirical_members(child, bound_, merged);
            } else {
                walk(child);
            }
        }
        if (!merged.empty()) groups_.insert(std::move(merged));
    }

    void walk(const Canon& c) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, CanonSum>) {
                    children(node.terms.begin(), node.terms.end(),
                             [](const CanonPtr& t) { return t.get(); });
                } else if constexpr (std::is_same_v<T, CanonProduct>) {
                    children(node.factors.begin(), node.factors.end(),
                             [](const CanonProduct::Factor& f) { return f.node.get(); });
                } else if constexpr (std::is_same_v<T, CanonPow>) {
                    // a constant exponent over a variable base (and vice versa)
                    // is its own cluster
                    if (constant_pure(*node.base, bound_)) {
                        add_cluster(*node.base);
                    } else {
                        walk(*node.base);
                    }
                    if (constant_pure(*node.exponent, bound_)) {
                        add_cluster(*node.exponent);
                    } else {
                        walk(*node.exponent);
                    }
                } else if constexpr (std::is_same_v<T, CanonCall>) {
                    for (const auto& arg : node.args) {
                        if (constant_pure(*arg, bound_)) {
                            add_cluster(*arg);
                        } else {
                            walk(*arg);
                        }
                    }
                }
                // non-constant leaves carry nothing
            },
            c.node);
    }

    const BoundStatement& bound_;
    std::set<std::set<std::string>> groups_;
};

// A cluster whose members are jointly covered by the other clusters that are
// subsets of it combines nothing independent; dropping it keeps N_E equal to
// the number of independent constants (e.g. an inlined derived coefficient
// built only from constants that are each counted elsewhere).
std::set<std::set<std::string>> drop_covered_unions(const std::set<std::set<std::string>>& groups) {
    std::set<std::set<std::string>> out;
    for (const auto& g : groups) {
        std::set<std::string> covered;
        for (const auto& h : groups) {
            if (h.size() < g.size() && std::includes(g.begin(), g.end(), h.begin(), h.end())) {
                covered.insert(h.begin(), h.end());
            }
        }
        if (covered != g) out.insert(g);
    }
    return out;
}

}  // namespace

std::vector<FusedConstantGroup> fuse_constants(const BoundStatement& bound) {
    GroupCollector collector(bound);
    collector.side(canonicalize(bound.statement.lhs));
    collector.side(canonicalize(bound.statement.rhs));
    const auto groups = drop_covered_unions(collector.take());
    std::vector<FusedConstantGroup> out;
    out.reserve(groups.size());
    for (const auto& g : groups) out.push_back(FusedConstantGroup{g});
    return out;
}

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

AnnotationInvalid::AnnotationInvalid(std::vector<Violation> v)
    : std::runtime_error([&v] {
          std::string msg = "annotation set invalid:";
          for (const auto& violation : v) msg += "\n  " + violation.message;
          return msg;
      }()),
      violations(std::move(v)) {}

namespace {

void collect_variable_concepts(const Expr& e, const BoundStatement& bound,
                               std::set<std::string>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SymbolRef>) {
                const SymbolBinding& b = bound.binding_of(node.name);
                if (b.tag == LeafTag::VariableConcept) out.insert(b.concept_id);
            } else if constexpr (std::is_same_v<T, Negate>) {
                collect_variable_concepts(*node.child, bound, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                collect_variable_concepts(*node.lhs, bound, out);
                collect_variable_concepts(*node.rhs, bound, out);
            } else if constexpr (std::is_same_v<T, Call>) {
                for (const auto& arg : node.args) collect_variable_concepts(*arg, bound, out);
            }
        },
        e.node);
}

}  // namespace

AnalysisResult score_bound(const BoundStatement& bound) {
    AnalysisResult result;
    collect_variable_concepts(*bound.statement.lhs, bound, result.variable_concepts);
    collect_variable_concepts(*bound.statement.rhs, bound, result.variable_concepts);
    result.n_o = static_cast<int>(result.variable_concepts.size());
    if (result.n_o == 0) {
        throw ZeroVariables();
    }
    result.groups = fuse_constants(bound);
    result.n_e = static_cast<int>(result.groups.size());
    result.score = Rational(1) - Rational(result.n_e, result.n_o);
    result.region = classify_statement(bound);
    if (result.n_o < 2) {
        result.warnings.push_back("below the N_O >= 2 floor for empirical statements");
    }
    return result;
}

AnalysisResult score_statement(const Statement& stmt, const AnnotationSet& annotations) {
    auto violations = validate(annotations);
    if (!violations.empty()) {
        throw AnnotationInvalid(std::move(violations));
    }
    const Statement inlined = inline_auxiliaries(stmt, annotations.auxiliaries);
    const BoundStatement bound = bind_symbols(inlined, annotations);
    return score_bound(bound);
}

nlohmann::json analysis_to_json(const AnalysisResult& result, const std::string& name) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : result.groups) {
        groups.push_back(std::vector<std::string>(g.members.begin(), g.members.end()));
    }
    return nlohmann::json{
        {"name", name},
        {"N_O", result.n_o},
        {"N_E", result.n_e},
        {"I", {{"num", result.score.numerator()}, {"den", result.score.denominator()}}},
        {"I_decimal", to_decimal(result.score)},
        {"region", to_string(result.region)},
        {"groups", groups},
        {"warnings", result.warnings},
    };
}

// ---------------------------------------------------------------------------
// ±1 robustness comparison
// ---------------------------------------------------------------------------

std::string to_string(ComparisonVerdict verdict) {
    switch (verdict) {
        case ComparisonVerdict::FirstMoreTransparent: return "FirstMoreTransparent";
        case ComparisonVerdict::SecondMoreTransparent: return "SecondMoreTransparent";
        case ComparisonVerdict::NotSignificant: return "NotSignificant";
    }
    return "?";
}

ComparisonVerdict significantly_different(const AnalysisResult& a, const AnalysisResult& b) {
    auto perturbed = [](const AnalysisResult& r) {
        std::vector<Rational> scores;
        for (int de = -1; de <= 1; ++de) {
            for (int dn = -1; dn <= 1; ++dn) {
                const long long n_e = std::max<long long>(0, r.n_e + de);
                const long long n_o = std::max<long long>(1, r.n_o + dn);
                scores.push_back(Rational(1) - Rational(n_e, n_o));
            }
        }
        return scores;
    };

    const auto as = perturbed(a);
    const auto bs = perturbed(b);
    bool always_first = true;
    bool always_second = true;
    for (const auto& ia : as) {
        for (const auto& ib : bs) {
            if (!(ia > ib)) always_first = false;
            if (!(ia < ib)) always_second = false;
        }
    }
    if (always_first) return ComparisonVerdict::FirstMoreTransparent;
    if (always_second) return ComparisonVerdict::SecondMoreTransparent;
    return ComparisonVerdict::NotSignificant;
}

}  // namespace galintel
