#include "fracops/frac.hpp"

#include <utility>

namespace fracops {

std::string_view op_name(OpKind op) {
    switch (op) {
    case OpKind::Add: return "add";
    case OpKind::Mul: return "mul";
    case OpKind::DualMul: return "dmul";
    case OpKind::DualAdd1: return "dadd1";
    case OpKind::DualAdd2: return "dadd2";
    }
    return "?";
}

std::string_view op_token(OpKind op) {
    switch (op) {
    case OpKind::Add: return "+";
    case OpKind::Mul: return "*";
    case OpKind::DualMul: return "@*";
    case OpKind::DualAdd1: return "@+";
    case OpKind::DualAdd2: return "@#";
    }
    return "?";
}

std::optional<OpKind> parse_op(std::string_view text) {
    for (OpKind op : kAllOps)
        if (text == op_name(op) || text == op_token(op))
            return op;
    return std::nullopt;
}

FracRep::FracRep(Rational num_, Rational den_)
    : num(std::move(num_)), den(std::move(den_)) {
    if (den.is_zero())
        throw zero_denominator_error();
}

FracRep make_rep(Rational num, Rational den) {
    return FracRep{std::move(num), std::move(den)};
}

FracRep make_rep(long long num, long long den) {
    return FracRep{Rational{num}, Rational{den}};
}

bool frac_eq(const FracRep& x, const FracRep& y) {
    return (x.num * y.den - x.den * y.num).is_zero();
}

bool rep_identical(const FracRep& x, const FracRep& y) {
    return x.num == y.num && x.den == y.den;
}

Value value_of(const FracRep& x) {
    return x.num / x.den;
}

std::optional<FracRep> try_apply(OpKind op, const FracRep& x, const FracRep& y) {
    const Rational& a = x.num;
    const Rational& b = x.den;
    const Rational& al = y.num;
    const Rational& be = y.den;
    switch (op) {
    case OpKind::Add:
        return FracRep{a * be + al * b, b * be};
    case OpKind::Mul:
        return FracRep{a * al, b * be};
    case OpKind::DualMul: {
        Rational den = b + be;
        if (den.is_zero())
            return std::nullopt;
        return FracRep{a + al, std::move(den)};
    }
    case OpKind::DualAdd1: {
        Rational den = b + be;
        if (den.is_zero())
            return std::nullopt;
        return FracRep{a + be * al + b, std::move(den)};
    }
    case OpKind::DualAdd2: {
        Rational den = b + be;
        if (den.is_zero())
            return std::nullopt;
        return FracRep{(a + be) * (al + b), std::move(den)};
    }
    }
    return std::nullopt;
}

FracRep apply(OpKind op, const FracRep& x, const FracRep& y) {
    auto res = try_apply(op, x, y);
    if (!res)
        throw zero_denominator_error("zero denominator in result of " + std::string(op_name(op)));
    return *std::move(res);
}

FracRep scale_value(const Rational& t, const FracRep& x) {
    return FracRep{t * x.num, x.den};
}

FracRep rescale(const Rational& t, const FracRep& x) {
    if (t.is_zero())
        throw zero_scale_error();
    return FracRep{t * x.num, t * x.den};
}

std::string rep_str(const FracRep& x) {
    auto comp = [](const Rational& r) {
        return r.is_integer() ? r.str() : "(" + r.str() + ")";
    };
    return comp(x.num) + "/" + comp(x.den);
}

} // namespace fracops
