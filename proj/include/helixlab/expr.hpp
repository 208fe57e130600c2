#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "helixlab/errors.hpp"
#include "helixlab/jet.hpp"

namespace helixlab {

enum class ExprOp {
    Literal,
    Variable,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
};

/// One immutable expression node. `value` holds the literal for Literal nodes
/// and the constant-folded exponent for Pow nodes.
struct ExprNode {
    ExprOp op = ExprOp::Literal;
    double value = 0.0;
    std::size_t offset = 0;  // byte position in the source text
    std::shared_ptr<const ExprNode> a;
    std::shared_ptr<const ExprNode> b;
};

/// A parsed expression over one free variable. Immutable after parsing, cheap
/// to copy, and safe to evaluate from any number of threads.
class ExprAst {
public:
    ExprAst() = default;

    bool valid() const { return root_ != nullptr; }
    const std::string& source() const { return source_; }
    const std::string& variable() const { return var_; }
    const ExprNode& root() const { return *root_; }

    /// Value and raw derivatives 1..4 at `at`. Throws EvalDomainError with the
    /// offending node's byte offset on log/sqrt/division/pow domain violations.
    Jet4 eval_jet(double at) const;

    /// Value only; same domain checks, far cheaper than eval_jet.
    double eval_value(double at) const;

    /// S-expression rendering, e.g. "(+ (^ t 2) 1)". Pow exponents appear
    /// constant-folded. Stable across runs; used by tests and diagnostics.
    std::string dump() const;

private:
    friend ExprAst parse(const std::string&, const std::string&);

    std::shared_ptr<const ExprNode> root_;
    std::string source_;
    std::string var_;
};

/// Parse `text` over the free variable `var`.
///
/// Grammar: binary + - * / ^, unary minus, sin cos tan exp log sqrt,
/// parentheses, decimal literals. Precedence: ^ over unary minus over * /
/// over + -; the binary operators are left-associative, ^ right-associative.
/// The exponent of ^ must be a constant expression. Whitespace is ignored;
/// there is no implicit multiplication ("2t" is a syntax error).
ExprAst parse(const std::string& text, const std::string& var = "t");

}  // namespace helixlab
