#include "helixlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace helixlab {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    double number = 0.0;
    std::string ident;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            double value = 0.0;
            const char* first = text.data() + i;
            const char* last = text.data() + n;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || !std::isfinite(value))
                throw ParseError(i, "malformed number literal");
            out.push_back({TokKind::Number, value, {}, i});
            i = static_cast<std::size_t>(ptr - text.data());
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({TokKind::Ident, 0.0, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '/': kind = TokKind::Slash; break;
            case '^': kind = TokKind::Caret; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            default:
                throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, 0.0, {}, i});
        ++i;
    }
    out.push_back({TokKind::End, 0.0, {}, n});
    return out;
}

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_node(ExprOp op, std::size_t offset, NodePtr a = nullptr, NodePtr b = nullptr,
                  double value = 0.0) {
    auto node = std::make_shared<ExprNode>();
    node->op = op;
    node->value = value;
    node->offset = offset;
    node->a = std::move(a);
    node->b = std::move(b);
    return node;
}

bool is_function(const std::string& name) {
    return name == "sin" || name == "cos" || name == "tan" || name == "exp" || name == "log" ||
           name == "sqrt";
}

ExprOp function_op(const std::string& name) {
    if (name == "sin") return ExprOp::Sin;
    if (name == "cos") return ExprOp::Cos;
    if (name == "tan") return ExprOp::Tan;
    if (name == "exp") return ExprOp::Exp;
    if (name == "log") return ExprOp::Log;
    return ExprOp::Sqrt;
}

bool contains_variable(const ExprNode& node) {
    if (node.op == ExprOp::Variable) return true;
    if (node.a && contains_variable(*node.a)) return true;
    if (node.b && contains_variable(*node.b)) return true;
    return false;
}

/// Scalar evaluation of a variable-free subtree, for exponent folding.
double fold_constant(const ExprNode& node) {
    switch (node.op) {
        case ExprOp::Literal: return node.value;
        case ExprOp::Neg: return -fold_constant(*node.a);
        case ExprOp::Add: return fold_constant(*node.a) + fold_constant(*node.b);
        case ExprOp::Sub: return fold_constant(*node.a) - fold_constant(*node.b);
        case ExprOp::Mul: return fold_constant(*node.a) * fold_constant(*node.b);
        case ExprOp::Div: return fold_constant(*node.a) / fold_constant(*node.b);
        case ExprOp::Pow: return std::pow(fold_constant(*node.a), node.value);
        case ExprOp::Sin: return std::sin(fold_constant(*node.a));
        case ExprOp::Cos: return std::cos(fold_constant(*node.a));
        case ExprOp::Tan: return std::tan(fold_constant(*node.a));
        case ExprOp::Exp: return std::exp(fold_constant(*node.a));
        case ExprOp::Log: return std::log(fold_constant(*node.a));
        case ExprOp::Sqrt: return std::sqrt(fold_constant(*node.a));
        case ExprOp::Variable: break;
    }
    throw ParseError(node.offset, "pow exponent must be a constant expression");
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string var)
        : tokens_(std::move(tokens)), var_(std::move(var)) {}

    NodePtr run() {
        NodePtr root = parse_expr();
        if (peek().kind != TokKind::End)
            throw ParseError(peek().offset, "unexpected trailing input");
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(TokKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            const Token& tok = peek();
            if (tok.kind == TokKind::Plus || tok.kind == TokKind::Minus) {
                advance();
                NodePtr rhs = parse_term();
                lhs = make_node(tok.kind == TokKind::Plus ? ExprOp::Add : ExprOp::Sub, tok.offset,
                                std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            const Token& tok = peek();
            if (tok.kind == TokKind::Star || tok.kind == TokKind::Slash) {
                advance();
                NodePtr rhs = parse_unary();
                lhs = make_node(tok.kind == TokKind::Star ? ExprOp::Mul : ExprOp::Div, tok.offset,
                                std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        const Token& tok = peek();
        if (tok.kind == TokKind::Minus) {
            advance();
            return make_node(ExprOp::Neg, tok.offset, parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        const Token& tok = peek();
        if (tok.kind != TokKind::Caret) return base;
        advance();
        NodePtr exponent = parse_unary();  // right-associative, allows "t^-2"
        if (contains_variable(*exponent))
            throw ParseError(exponent->offset, "pow exponent must be a constant expression");
        const double folded = fold_constant(*exponent);
        if (!std::isfinite(folded))
            throw ParseError(exponent->offset, "pow exponent does not fold to a finite value");
        return make_node(ExprOp::Pow, tok.offset, std::move(base), nullptr, folded);
    }

    NodePtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokKind::Number:
                advance();
                return make_node(ExprOp::Literal, tok.offset, nullptr, nullptr, tok.number);
            case TokKind::Ident: {
                advance();
                if (tok.ident == var_) return make_node(ExprOp::Variable, tok.offset);
                if (!is_function(tok.ident))
                    throw ParseError(tok.offset, "unknown identifier '" + tok.ident + "'");
                if (!accept(TokKind::LParen))
                    throw ParseError(peek().offset,
                                     "expected '(' after function '" + tok.ident + "'");
                NodePtr arg = parse_expr();
                if (!accept(TokKind::RParen))
                    throw ParseError(peek().offset, "expected ')'");
                return make_node(function_op(tok.ident), tok.offset, std::move(arg));
            }
            case TokKind::LParen: {
                advance();
                NodePtr inner = parse_expr();
                if (!accept(TokKind::RParen))
                    throw ParseError(peek().offset, "expected ')'");
                return inner;
            }
            default:
                throw ParseError(tok.offset, "expected a number, identifier, or '('");
        }
    }

    std::vector<Token> tokens_;
    std::string var_;
    std::size_t pos_ = 0;
};

bool integer_exponent(double e, long long& n) {
    if (e != std::rint(e) || std::fabs(e) > 1e6) return false;
    n = static_cast<long long>(e);
    return true;
}

Jet4 eval_node(const ExprNode& node, double at) {
    switch (node.op) {
        case ExprOp::Literal: return Jet4::constant(node.value);
        case ExprOp::Variable: return Jet4::variable(at);
        case ExprOp::Neg: return -eval_node(*node.a, at);
        case ExprOp::Add: return eval_node(*node.a, at) + eval_node(*node.b, at);
        case ExprOp::Sub: return eval_node(*node.a, at) - eval_node(*node.b, at);
        case ExprOp::Mul: return eval_node(*node.a, at) * eval_node(*node.b, at);
        case ExprOp::Div: {
            const Jet4 num = eval_node(*node.a, at);
            const Jet4 den = eval_node(*node.b, at);
            if (den.d0 == 0.0) throw EvalDomainError(node.offset, "division by zero");
            return num / den;
        }
        case ExprOp::Pow: {
            const Jet4 base = eval_node(*node.a, at);
            long long n = 0;
            if (integer_exponent(node.value, n)) {
                if (base.d0 == 0.0 && n < 0)
                    throw EvalDomainError(node.offset, "zero base with negative exponent");
                return powi(base, n);
            }
            if (base.d0 <= 0.0)
                throw EvalDomainError(node.offset,
                                      "pow with non-integer exponent needs a positive base");
            return exp(log(base) * node.value);
        }
        case ExprOp::Sin: return sin(eval_node(*node.a, at));
        case ExprOp::Cos: return cos(eval_node(*node.a, at));
        case ExprOp::Tan: return tan(eval_node(*node.a, at));
        case ExprOp::Exp: return exp(eval_node(*node.a, at));
        case ExprOp::Log: {
            const Jet4 arg = eval_node(*node.a, at);
            if (arg.d0 <= 0.0) throw EvalDomainError(node.offset, "log of a nonpositive value");
            return log(arg);
        }
        case ExprOp::Sqrt: {
            const Jet4 arg = eval_node(*node.a, at);
            if (arg.d0 <= 0.0)
                throw EvalDomainError(node.offset,
                                      "sqrt needs a positive argument (jet derivatives are "
                                      "undefined at zero)");
            return sqrt(arg);
        }
    }
    throw EvalDomainError(node.offset, "corrupt expression node");
}

double eval_node_value(const ExprNode& node, double at) {
    switch (node.op) {
        case ExprOp::Literal: return node.value;
        case ExprOp::Variable: return at;
        case ExprOp::Neg: return -eval_node_value(*node.a, at);
        case ExprOp::Add: return eval_node_value(*node.a, at) + eval_node_value(*node.b, at);
        case ExprOp::Sub: return eval_node_value(*node.a, at) - eval_node_value(*node.b, at);
        case ExprOp::Mul: return eval_node_value(*node.a, at) * eval_node_value(*node.b, at);
        case ExprOp::Div: {
            const double den = eval_node_value(*node.b, at);
            if (den == 0.0) throw EvalDomainError(node.offset, "division by zero");
            return eval_node_value(*node.a, at) / den;
        }
        case ExprOp::Pow: {
            const double base = eval_node_value(*node.a, at);
            long long n = 0;
            if (integer_exponent(node.value, n)) {
                if (base == 0.0 && n < 0)
                    throw EvalDomainError(node.offset, "zero base with negative exponent");
                return std::pow(base, static_cast<double>(n));
            }
            if (base <= 0.0)
                throw EvalDomainError(node.offset,
                                      "pow with non-integer exponent needs a positive base");
            return std::pow(base, node.value);
        }
        case ExprOp::Sin: return std::sin(eval_node_value(*node.a, at));
        case ExprOp::Cos: return std::cos(eval_node_value(*node.a, at));
        case ExprOp::Tan: return std::tan(eval_node_value(*node.a, at));
        case ExprOp::Exp: return std::exp(eval_node_value(*node.a, at));
        case ExprOp::Log: {
            const double arg = eval_node_value(*node.a, at);
            if (arg <= 0.0) throw EvalDomainError(node.offset, "log of a nonpositive value");
            return std::log(arg);
        }
        case ExprOp::Sqrt: {
            const double arg = eval_node_value(*node.a, at);
            if (arg <= 0.0)
                throw EvalDomainError(node.offset,
                                      "sqrt needs a positive argument (jet derivatives are "
                                      "undefined at zero)");
            return std::sqrt(arg);
        }
    }
    throw EvalDomainError(node.offset, "corrupt expression node");
}

std::string fmt_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_node(const ExprNode& node, const std::string& var, std::string& out) {
    switch (node.op) {
        case ExprOp::Literal: out += fmt_value(node.value); return;
        case ExprOp::Variable: out += var; return;
        case ExprOp::Neg:
        case ExprOp::Sin:
        case ExprOp::Cos:
        case ExprOp::Tan:
        case ExprOp::Exp:
        case ExprOp::Log:
        case ExprOp::Sqrt: {
            const char* name = nullptr;
            switch (node.op) {
                case ExprOp::Neg: name = "neg"; break;
                case ExprOp::Sin: name = "sin"; break;
                case ExprOp::Cos: name = "cos"; break;
                case ExprOp::Tan: name = "tan"; break;
                case ExprOp::Exp: name = "exp"; break;
                case ExprOp::Log: name = "log"; break;
                default: name = "sqrt"; break;
            }
            out += '(';
            out += name;
            out += ' ';
            dump_node(*node.a, var, out);
            out += ')';
            return;
        }
        case ExprOp::Pow:
            out += "(^ ";
            dump_node(*node.a, var, out);
            out += ' ';
            out += fmt_value(node.value);
            out += ')';
            return;
        case ExprOp::Add:
        case ExprOp::Sub:
        case ExprOp::Mul:
        case ExprOp::Div: {
            char symbol = '+';
            if (node.op == ExprOp::Sub) symbol = '-';
            if (node.op == ExprOp::Mul) symbol = '*';
            if (node.op == ExprOp::Div) symbol = '/';
            out += '(';
            out += symbol;
            out += ' ';
            dump_node(*node.a, var, out);
            out += ' ';
            dump_node(*node.b, var, out);
            out += ')';
            return;
        }
    }
}

}  // namespace

Jet4 ExprAst::eval_jet(double at) const { return eval_node(*root_, at); }

double ExprAst::eval_value(double at) const { return eval_node_value(*root_, at); }

std::string ExprAst::dump() const {
    std::string out;
    dump_node(*root_, var_, out);
    return out;
}

ExprAst parse(const std::string& text, const std::string& var) {
    if (text.empty()) throw ParseError(0, "empty expression");
    if (is_function(var))
        throw ParseError(0, "free variable '" + var + "' collides with a function name");
    Parser parser(tokenize(text), var);
    ExprAst ast;
    ast.root_ = parser.run();
    ast.source_ = text;
    ast.var_ = var;
    return ast;
}

}  // namespace helixlab
