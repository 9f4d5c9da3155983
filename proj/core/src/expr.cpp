#include "galintel/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace galintel {

ExprPtr make_number(Rational value) {
    return std::make_shared<Expr>(Expr{NumberLit{std::move(value)}});
}

ExprPtr make_symbol(std::string name) {
    return std::make_shared<Expr>(Expr{SymbolRef{std::move(name)}});
}

ExprPtr make_negate(ExprPtr child) {
    return std::make_shared<Expr>(Expr{Negate{std::move(child)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_call(std::string name, std::vector<ExprPtr> args) {
    return std::make_shared<Expr>(Expr{Call{std::move(name), std::move(args)}});
}

CycleError::CycleError(std::vector<std::string> names)
    : std::runtime_error([&names] {
          std::string msg = "auxiliary cycle ";
          for (std::size_t i = 0; i < names.size(); ++i) {
              if (i > 0) msg += "->";
              msg += names[i];
          }
          return msg;
      }()),
      cycle(std::move(names)) {}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, Equals, LParen, RParen, Comma, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t position;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            const std::size_t at = pos_;
            if (pos_ >= src_.size()) {
                out.push_back({TokKind::End, "", at});
                break;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number(at));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(ident(at));
            } else {
                TokKind kind;
                switch (c) {
                    case '+': kind = TokKind::Plus; break;
                    case '-': kind = TokKind::Minus; break;
                    case '*': kind = TokKind::Star; break;
                    case '/': kind = TokKind::Slash; break;
                    case '^': kind = TokKind::Caret; break;
                    case '=': kind = TokKind::Equals; break;
                    case '(': kind = TokKind::LParen; break;
                    case ')': kind = TokKind::RParen; break;
                    case ',': kind = TokKind::Comma; break;
                    default:
                        throw ParseError(std::string("illegal character '") + c + "'", at);
                }
                ++pos_;
                out.push_back({kind, std::string(1, c), at});
            }
        }
        return out;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    Token number(std::size_t at) {
        std::string text;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            text += src_[pos_++];
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            text += src_[pos_++];
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                throw ParseError("expected digit after decimal point", pos_);
            }
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                text += src_[pos_++];
            }
        }
        return {TokKind::Number, text, at};
    }

    Token ident(std::size_t at) {
        std::string text;
        auto body = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        while (pos_ < src_.size() && body(src_[pos_])) {
            text += src_[pos_++];
        }
        while (pos_ < src_.size() && src_[pos_] == '\'') {
            text += src_[pos_++];
        }
        return {TokKind::Ident, text, at};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive descent parser, one production per grammar rule.
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Statement statement(std::string source) {
        ExprPtr lhs = expr();
        expect(TokKind::Equals, "expected '='");
        ExprPtr rhs = expr();
        if (peek().kind == TokKind::Equals) {
            throw ParseError("a statement has exactly one relation", peek().position);
        }
        expect(TokKind::End, "unexpected trailing input");
        return Statement{std::move(lhs), std::move(rhs), std::move(source)};
    }

    ExprPtr sole_expression() {
        ExprPtr e = expr();
        if (peek().kind == TokKind::Equals) {
            throw ParseError("relation not allowed inside an expression", peek().position);
        }
        expect(TokKind::End, "unexpected trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[idx_]; }

    Token take() { return tokens_[idx_++]; }

    void expect(TokKind kind, const std::string& message) {
        if (peek().kind != kind) {
            throw ParseError(message, peek().position);
        }
        ++idx_;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            const BinaryOp op = take().kind == TokKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
            left = make_binary(op, std::move(left), term());
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = unary();
        while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
            const BinaryOp op = take().kind == TokKind::Star ? BinaryOp::Mul : BinaryOp::Div;
            left = make_binary(op, std::move(left), unary());
        }
        return left;
    }

    ExprPtr unary() {
        if (peek().kind == TokKind::Minus) {
            take();
            return make_negate(unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == TokKind::Caret) {
            take();
            return make_binary(BinaryOp::Pow, std::move(base), unary());
        }
        return base;
    }

    ExprPtr atom() {
        const Token tok = take();
        switch (tok.kind) {
            case TokKind::Number:
                return make_number(rational_from_decimal(tok.text));
            case TokKind::Ident: {
                if (peek().kind == TokKind::LParen) {
                    take();
                    std::vector<ExprPtr> args;
                    args.push_back(expr());
                    while (peek().kind == TokKind::Comma) {
                        take();
                        args.push_back(expr());
                    }
                    expect(TokKind::RParen, "expected ')' to close argument list");
                    return make_call(tok.text, std::move(args));
                }
                return make_symbol(tok.text);
            }
            case TokKind::LParen: {
                ExprPtr inner = expr();
                expect(TokKind::RParen, "unbalanced parentheses");
                return inner;
            }
            default:
                throw ParseError("expected number, identifier or '('", tok.position);
        }
    }

    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
};

}  // namespace

Statement parse_statement(std::string_view source) {
    if (source.empty()) {
        throw ParseError("empty statement source", 0);
    }
    Parser parser(Lexer(source).run());
    return parser.statement(std::string(source));
}

ExprPtr parse_expression(std::string_view source) {
    if (source.empty()) {
        throw ParseError("empty expression source", 0);
    }
    Parser parser(Lexer(source).run());
    return parser.sole_expression();
}

// ---------------------------------------------------------------------------
// Rendering with minimal parentheses; render(parse(s)) re-parses equal.
// ---------------------------------------------------------------------------

namespace {

constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int precedence(const Expr& e) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Binary>) {
                switch (node.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub: return kPrecAdd;
                    case BinaryOp::Mul:
                    case BinaryOp::Div: return kPrecMul;
                    case BinaryOp::Pow: return kPrecPow;
                }
                return kPrecAtom;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return kPrecNeg;
            } else {
                return kPrecAtom;
            }
        },
        e.node);
}

// Parsed literals always have a denominator of the form 2^a * 5^b, so they can
// be written back as finite decimals; that keeps render/parse a round trip
// (a slash would re-parse as division).
std::string render_number(const Rational& value) {
    long long num = value.numerator();
    long long den = value.denominator();
    if (den == 1) return std::to_string(num);
    long long scale = 1;
    int digits = 0;
    while (scale % den != 0 && digits < 18) {
        scale *= 10;
        ++digits;
    }
    if (scale % den != 0) {
        // not a decimal-representable rational; emit an explicit quotient
        return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
    long long scaled = num * (scale / den);
    const bool negative = scaled < 0;
    std::string body = std::to_string(negative ? -scaled : scaled);
    if (static_cast<int>(body.size()) <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

void render_to(const Expr& e, std::ostream& out);

void render_child(const Expr& child, int parent_prec, bool needs_higher, std::ostream& out) {
    const bool parens = needs_higher ? precedence(child) <= parent_prec
                                     : precedence(child) < parent_prec;
    if (parens) out << '(';
    render_to(child, out);
    if (parens) out << ')';
}

void render_to(const Expr& e, std::ostream& out) {
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NumberLit>) {
                out << render_number(node.value);
            } else if constexpr (std::is_same_v<T, SymbolRef>) {
                out << node.name;
            } else if constexpr (std::is_same_v<T, Negate>) {
                out << '-';
                render_child(*node.child, kPrecNeg, false, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const int prec = precedence(Expr{node});
                const char* op = "";
                switch (node.op) {
                    case BinaryOp::Add: op = " + "; break;
                    case BinaryOp::Sub: op = " - "; break;
                    case BinaryOp::Mul: op = "*"; break;
                    case BinaryOp::Div: op = "/"; break;
                    case BinaryOp::Pow: op = "^"; break;
                }
                if (node.op == BinaryOp::Pow) {
                    // right-associative
                    render_child(*node.lhs, prec, true, out);
                    out << op;
                    render_child(*node.rhs, prec, false, out);
                } else {
                    render_child(*node.lhs, prec, false, out);
                    out << op;
                    render_child(*node.rhs, prec, true, out);
                }
            } else if constexpr (std::is_same_v<T, Call>) {
                out << node.name << '(';
                for (std::size_t i = 0; i < node.args.size(); ++i) {
                    if (i > 0) out << ", ";
                    render_to(*node.args[i], out);
                }
                out << ')';
            }
        },
        e.node);
}

}  // namespace

std::string render(const Expr& expr) {
    std::ostringstream out;
    render_to(expr, out);
    return out.str();
}

std::string render(const Statement& stmt) {
    return render(*stmt.lhs) + " = " + render(*stmt.rhs);
}

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* n = std::get_if<NumberLit>(&a.node)) {
        return n->value == std::get<NumberLit>(b.node).value;
    }
    if (const auto* s = std::get_if<SymbolRef>(&a.node)) {
        return s->name == std::get<SymbolRef>(b.node).name;
    }
    if (const auto* neg = std::get_if<Negate>(&a.node)) {
        return equal(*neg->child, *std::get<Negate>(b.node).child);
    }
    if (const auto* bin = std::get_if<Binary>(&a.node)) {
        const auto& other = std::get<Binary>(b.node);
        return bin->op == other.op && equal(*bin->lhs, *other.lhs) && equal(*bin->rhs, *other.rhs);
    }
    const auto& ca = std::get<Call>(a.node);
    const auto& cb = std::get<Call>(b.node);
    if (ca.name != cb.name || ca.args.size() != cb.args.size()) return false;
    for (std::size_t i = 0; i < ca.args.size(); ++i) {
        if (!equal(*ca.args[i], *cb.args[i])) return false;
    }
    return true;
}

bool equal(const Statement& a, const Statement& b) {
    return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
}

// ---------------------------------------------------------------------------
// Symbol enumeration
// ---------------------------------------------------------------------------

namespace {

void collect_symbols(const Expr& e, SymbolSets& out) {
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SymbolRef>) {
                out.symbols.insert(node.name);
            } else if constexpr (std::is_same_v<T, Negate>) {
                collect_symbols(*node.child, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                collect_symbols(*node.lhs, out);
                collect_symbols(*node.rhs, out);
            } else if constexpr (std::is_same_v<T, Call>) {
                out.functions.insert(node.name);
                for (const auto& arg : node.args) collect_symbols(*arg, out);
            }
        },
        e.node);
}

}  // namespace

SymbolSets free_symbols(const Expr& expr) {
    SymbolSets out;
    collect_symbols(expr, out);
    return out;
}

SymbolSets free_symbols(const Statement& stmt) {
    SymbolSets out;
    collect_symbols(*stmt.lhs, out);
    collect_symbols(*stmt.rhs, out);
    return out;
}

// ---------------------------------------------------------------------------
// Auxiliary inlining
// ---------------------------------------------------------------------------

namespace {

class Inliner {
public:
    explicit Inliner(const AuxMap& aux) : aux_(aux) {}

    ExprPtr resolve(const std::string& name) {
        if (auto it = done_.find(name); it != done_.end()) return it->second;
        if (in_progress_.count(name)) {
            // reconstruct the cycle from the active stack
            std::vector<std::string> cycle;
            auto start = std::find(stack_.begin(), stack_.end(), name);
            cycle.assign(start, stack_.end());
            cycle.push_back(name);
            throw CycleError(std::move(cycle));
        }
        in_progress_.insert(name);
        stack_.push_back(name);
        ExprPtr parsed;
        try {
            parsed = parse_expression(aux_.at(name));
        } catch (const ParseError& e) {
            throw ParseError("auxiliary '" + name + "': " + e.what(), e.position);
        }
        ExprPtr result = substitute(parsed);
        stack_.pop_back();
        in_progress_.erase(name);
        done_.emplace(name, result);
        return result;
    }

    ExprPtr substitute(const ExprPtr& e) {
        return std::visit(
            [&](const auto& node) -> ExprPtr {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, SymbolRef>) {
                    if (aux_.count(node.name)) return resolve(node.name);
                    return e;
                } else if constexpr (std::is_same_v<T, Negate>) {
                    return make_negate(substitute(node.child));
                } else if constexpr (std::is_same_v<T, Binary>) {
                    return make_binary(node.op, substitute(node.lhs), substitute(node.rhs));
                } else if constexpr (std::is_same_v<T, Call>) {
                    std::vector<ExprPtr> args;
                    args.reserve(node.args.size());
                    for (const auto& a : node.args) args.push_back(substitute(a));
                    return make_call(node.name, std::move(args));
                } else {
                    return e;
                }
            },
            e->node);
    }

private:
    const AuxMap& aux_;
    std::map<std::string, ExprPtr> done_;
    std::set<std::string> in_progress_;
    std::vector<std::string> stack_;
};

}  // namespace

ExprPtr inline_auxiliaries(const ExprPtr& expr, const AuxMap& aux) {
    if (aux.empty()) return expr;
    Inliner inliner(aux);
    return inliner.substitute(expr);
}

Statement inline_auxiliaries(const Statement& stmt, const AuxMap& aux) {
    if (aux.empty()) return stmt;
    Inliner inliner(aux);
    Statement out;
    out.lhs = inliner.substitute(stmt.lhs);
    out.rhs = inliner.substitute(stmt.rhs);
    out.source = stmt.source;
    return out;
}

}  // namespace galintel
