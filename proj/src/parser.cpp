#include "fracops/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace fracops {

namespace {

enum class Tok {
    Frac,
    Int,
    Plus,
    Star,
    DualStar,
    DualPlus,
    DualHash,
    Tilde,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok kind;
    BigInt num;
    BigInt den;
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            bool done = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (done)
                return out;
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool starts_with(std::string_view s) const {
        return text_.substr(pos_).starts_with(s);
    }

    Token simple(Tok kind, std::size_t len) {
        Token t{kind, {}, {}, pos_, pos_ + len};
        pos_ += len;
        return t;
    }

    BigInt lex_int(const char* what) {
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            throw syntax_error(std::string("expected ") + what, start);
        return BigInt{text_.substr(start, pos_ - start)};
    }

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size())
            return Token{Tok::End, {}, {}, pos_, pos_};

        const char c = text_[pos_];
        switch (c) {
        case '+': return simple(Tok::Plus, 1);
        case '*': return simple(Tok::Star, 1);
        case '~': return simple(Tok::Tilde, 1);
        case '(': return simple(Tok::LParen, 1);
        case ')': return simple(Tok::RParen, 1);
        case '@':
            if (starts_with("@*"))
                return simple(Tok::DualStar, 2);
            if (starts_with("@+"))
                return simple(Tok::DualPlus, 2);
            if (starts_with("@#"))
                return simple(Tok::DualHash, 2);
            throw syntax_error("unknown operator after '@'", pos_);
        default:
            break;
        }
        // UTF-8 aliases for the operation glyphs
        if (starts_with("\xe2\x8a\x99")) // circled dot
            return simple(Tok::DualStar, 3);
        if (starts_with("\xe2\x8a\x95")) // circled plus
            return simple(Tok::DualPlus, 3);
        if (starts_with("\xe2\x8a\x9e")) // squared plus
            return simple(Tok::DualHash, 3);
        if (starts_with("\xc2\xb7")) // centered dot
            return simple(Tok::Star, 2);

        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            BigInt first = lex_int("digits");
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_; // literal slash; no whitespace allowed around it
                BigInt second = lex_int("denominator digits");
                return Token{Tok::Frac, std::move(first), std::move(second), start, pos_};
            }
            return Token{Tok::Int, std::move(first), {}, start, pos_};
        }
        throw syntax_error("unexpected character", pos_);
    }
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        if (cur().kind != Tok::End)
            throw syntax_error("unexpected trailing input", cur().begin);
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;

    const Token& cur() const { return tokens_[idx_]; }
    const Token& peek() const { return tokens_[idx_ + 1 < tokens_.size() ? idx_ + 1 : tokens_.size() - 1]; }
    Token take() { return std::move(tokens_[idx_++]); }

    static OpKind sum_op(Tok t) {
        return t == Tok::Plus ? OpKind::Add
               : t == Tok::DualPlus ? OpKind::DualAdd1
                                    : OpKind::DualAdd2;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        while (cur().kind == Tok::Plus || cur().kind == Tok::DualPlus ||
               cur().kind == Tok::DualHash) {
            OpKind op = sum_op(take().kind);
            ExprPtr rhs = parse_term();
            Span span{lhs->span.begin, rhs->span.end};
            lhs = std::make_unique<Expr>(
                Expr::BinOp{op, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (cur().kind == Tok::Star || cur().kind == Tok::DualStar) {
            OpKind op = take().kind == Tok::Star ? OpKind::Mul : OpKind::DualMul;
            ExprPtr rhs = parse_factor();
            Span span{lhs->span.begin, rhs->span.end};
            lhs = std::make_unique<Expr>(
                Expr::BinOp{op, std::move(lhs), std::move(rhs)}, span);
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        switch (cur().kind) {
        case Tok::Frac: {
            if (peek().kind == Tok::Tilde)
                return parse_scale();
            Token t = take();
            FracRep lit{Rational{std::move(t.num)}, Rational{std::move(t.den)}};
            return std::make_unique<Expr>(Expr::Literal{std::move(lit)},
                                          Span{t.begin, t.end});
        }
        case Tok::Int:
            if (peek().kind == Tok::Tilde)
                return parse_scale();
            throw syntax_error("expected '/denominator' to complete the fraction",
                               cur().begin);
        case Tok::LParen: {
            Token open = take();
            ExprPtr inner = parse_sum();
            if (cur().kind != Tok::RParen)
                throw syntax_error("expected ')'", cur().begin);
            Token close = take();
            return std::make_unique<Expr>(Expr::Group{std::move(inner)},
                                          Span{open.begin, close.end});
        }
        default:
            throw syntax_error("expected a fraction, scalar or '('", cur().begin);
        }
    }

    ExprPtr parse_scale() {
        Token t = take(); // Int or Frac
        Rational factor = t.kind == Tok::Int
                              ? Rational{std::move(t.num)}
                              : Rational{std::move(t.num), std::move(t.den)};
        take(); // tilde
        ExprPtr child = parse_factor();
        Span span{t.begin, child->span.end};
        return std::make_unique<Expr>(Expr::Scale{std::move(factor), std::move(child)},
                                      span);
    }
};

void print_node(const Expr& e, std::string& out) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node)) {
        out += lit->value.num.str();
        out += '/';
        out += lit->value.den.str();
    } else if (const auto* bin = std::get_if<Expr::BinOp>(&e.node)) {
        print_node(*bin->lhs, out);
        out += ' ';
        out += op_token(bin->op);
        out += ' ';
        print_node(*bin->rhs, out);
    } else if (const auto* sc = std::get_if<Expr::Scale>(&e.node)) {
        out += sc->factor.str();
        out += " ~ ";
        print_node(*sc->child, out);
    } else {
        out += '(';
        print_node(*std::get_if<Expr::Group>(&e.node)->child, out);
        out += ')';
    }
}

FracRep eval_node(const Expr& e) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node))
        return lit->value;
    if (const auto* bin = std::get_if<Expr::BinOp>(&e.node)) {
        FracRep lhs = eval_node(*bin->lhs);
        FracRep rhs = eval_node(*bin->rhs);
        auto res = try_apply(bin->op, lhs, rhs);
        if (!res)
            throw eval_zero_denominator(e.span);
        return *std::move(res);
    }
    if (const auto* sc = std::get_if<Expr::Scale>(&e.node))
        return scale_value(sc->factor, eval_node(*sc->child));
    return eval_node(*std::get_if<Expr::Group>(&e.node)->child);
}

} // namespace

ExprPtr parse_expr(std::string_view text) {
    return Parser{Lexer{text}.run()}.run();
}

std::string pretty_print(const Expr& e) {
    std::string out;
    print_node(e, out);
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    if (const auto* la = std::get_if<Expr::Literal>(&a.node))
        return rep_identical(la->value, std::get_if<Expr::Literal>(&b.node)->value);
    if (const auto* ba = std::get_if<Expr::BinOp>(&a.node)) {
        const auto* bb = std::get_if<Expr::BinOp>(&b.node);
        return ba->op == bb->op && expr_equal(*ba->lhs, *bb->lhs) &&
               expr_equal(*ba->rhs, *bb->rhs);
    }
    if (const auto* sa = std::get_if<Expr::Scale>(&a.node)) {
        const auto* sb = std::get_if<Expr::Scale>(&b.node);
        return sa->factor == sb->factor && expr_equal(*sa->child, *sb->child);
    }
    return expr_equal(*std::get_if<Expr::Group>(&a.node)->child,
                      *std::get_if<Expr::Group>(&b.node)->child);
}

EvalResult eval_expr(const Expr& e) {
    FracRep rep = eval_node(e);
    Value value = value_of(rep);
    return EvalResult{std::move(rep), std::move(value)};
}

} // namespace fracops
