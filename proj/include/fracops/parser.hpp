#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "fracops/frac.hpp"

namespace fracops {

/// Byte range [begin, end) in the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Expr;
using ExprPtr = std::unique_ptr<Expr>;

/// Expression tree. The tree is the semantics: the evaluator never
/// reassociates or simplifies, because the dual additions are neither
/// associative nor representation-stable. Parentheses from the source are
/// kept as Group nodes so printing reproduces them exactly.
class Expr {
public:
    struct Literal {
        FracRep value;
    };
    struct BinOp {
        OpKind op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Scale {
        Rational factor;
        ExprPtr child;
    };
    struct Group {
        ExprPtr child;
    };
    using Node = std::variant<Literal, BinOp, Scale, Group>;

    Expr(Node node_, Span span_) : node(std::move(node_)), span(span_) {}

    Node node;
    Span span;
};

struct syntax_error : std::runtime_error {
    std::size_t offset;
    syntax_error(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg), offset(offset_) {}
};

/// Zero denominator produced while evaluating; span points at the
/// subexpression whose result had denominator zero.
struct eval_zero_denominator : zero_denominator_error {
    Span span;
    explicit eval_zero_denominator(Span span_)
        : zero_denominator_error("zero denominator while evaluating"), span(span_) {}
};

/// Grammar:
///   expr   := term   (('+' | '@+' | '@#') term)*     left-associative
///   term   := factor (('*' | '@*') factor)*          left-associative
///   factor := scalar '~' factor | fraction | '(' expr ')'
///   scalar := INT | INT'/'INT        fraction := INT'/'INT
/// INT may carry a leading '-', so 1/-2 and -1/2 are distinct literals; '-'
/// is never a binary operator. The glyphs for the dual operations are
/// accepted as aliases for @*, @+, @#, and a centered dot for *. Whitespace
/// is free except inside literals.
ExprPtr parse_expr(std::string_view text);

/// Inverse of parse_expr on parser-shaped trees:
/// parse_expr(pretty_print(e)) is structurally equal to e.
std::string pretty_print(const Expr& e);

/// Structural equality; spans are ignored.
bool expr_equal(const Expr& a, const Expr& b);

struct EvalResult {
    FracRep rep;
    Value value;
};

/// Bottom-up evaluation; intermediate results stay unreduced representations.
EvalResult eval_expr(const Expr& e);

} // namespace fracops
