#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "galintel/rational.hpp"

namespace galintel {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
    Rational value;
};

struct SymbolRef {
    std::string name;
};

struct Negate {
    ExprPtr child;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Call {
    std::string name;
    std::vector<ExprPtr> args;
};

/// Immutable expression tree. Literals are exact rationals.
struct Expr {
    std::variant<NumberLit, SymbolRef, Negate, Binary, Call> node;
};

ExprPtr make_number(Rational value);
ExprPtr make_symbol(std::string name);
ExprPtr make_negate(ExprPtr child);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(std::string name, std::vector<ExprPtr> args);

/// One equation: lhs = rhs. The relation never nests.
struct Statement {
    ExprPtr lhs;
    ExprPtr rhs;
    std::string source;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message), position(pos) {}
};

struct CycleError : std::runtime_error {
    std::vector<std::string> cycle;
    explicit CycleError(std::vector<std::string> names);
};

Statement parse_statement(std::string_view source);
ExprPtr parse_expression(std::string_view source);

std::string render(const Expr& expr);
std::string render(const Statement& stmt);

bool equal(const Expr& a, const Expr& b);
bool equal(const Statement& a, const Statement& b);

struct SymbolSets {
    std::set<std::string> symbols;    // Symbol leaves
    std::set<std::string> functions;  // applied function names
};

SymbolSets free_symbols(const Expr& expr);
SymbolSets free_symbols(const Statement& stmt);

/// symbol name -> DSL definition text
using AuxMap = std::map<std::string, std::string>;

/// Replaces every auxiliary symbol by its recursively inlined definition.
/// Throws CycleError on mutually recursive definitions, ParseError if a
/// definition does not parse.
Statement inline_auxiliaries(const Statement& stmt, const AuxMap& aux);
ExprPtr inline_auxiliaries(const ExprPtr& expr, const AuxMap& aux);

}  // namespace galintel
