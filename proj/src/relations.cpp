#include "fracops/relations.hpp"

#include <stdexcept>
#include <utility>

namespace fracops {

namespace {

const Rational kOne{1};
const Rational kTwo{2};

bool unordered_is(const RelationId& rel, OpKind a, OpKind b) {
    return rel.op_a == a && rel.op_b == b;
}

} // namespace

std::string_view outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Undefined: return "undefined";
    }
    return "?";
}

RelationId RelationId::agreement(OpKind a, OpKind b) {
    if (static_cast<int>(a) > static_cast<int>(b))
        std::swap(a, b);
    return RelationId{RelationKind::Agreement, a, b};
}

RelationId RelationId::proportional(OpKind a, OpKind b) {
    if (static_cast<int>(a) > static_cast<int>(b))
        std::swap(a, b);
    return RelationId{RelationKind::Proportional, a, b};
}

RelationId RelationId::kernel(OpKind op) {
    return RelationId{RelationKind::Kernel, op, op};
}

RelationId RelationId::commutes(OpKind op) {
    return RelationId{RelationKind::Commutes, op, op};
}

std::string RelationId::name() const {
    switch (kind) {
    case RelationKind::Agreement:
    case RelationKind::Proportional:
        return std::string(op_name(op_a)) + "=" + std::string(op_name(op_b));
    case RelationKind::Kernel:
        return std::string(op_name(op_a)) + "=0";
    case RelationKind::Commutes:
        return "comm:" + std::string(op_name(op_a));
    }
    return "?";
}

std::optional<RelationId> RelationId::parse(std::string_view text) {
    if (text.starts_with("comm:")) {
        auto op = parse_op(text.substr(5));
        if (!op)
            return std::nullopt;
        return commutes(*op);
    }
    auto eq = text.find('=');
    if (eq == std::string_view::npos)
        return std::nullopt;
    auto lhs = parse_op(text.substr(0, eq));
    if (!lhs)
        return std::nullopt;
    auto rhs_text = text.substr(eq + 1);
    if (rhs_text == "0")
        return kernel(*lhs);
    auto rhs = parse_op(rhs_text);
    if (!rhs || *rhs == *lhs)
        return std::nullopt;
    return agreement(*lhs, *rhs);
}

Outcome agrees(OpKind op_a, OpKind op_b, const FracRep& x, const FracRep& y) {
    auto ra = try_apply(op_a, x, y);
    auto rb = try_apply(op_b, x, y);
    if (!ra && !rb)
        return Outcome::Undefined;
    if (!ra || !rb)
        return Outcome::Fails;
    return value_of(*ra) == value_of(*rb) ? Outcome::Holds : Outcome::Fails;
}

Outcome proportional(OpKind op_a, OpKind op_b, const Rational& lambda,
                     const FracRep& x, const FracRep& y) {
    if (lambda.is_zero())
        throw std::invalid_argument("proportional: lambda must be nonzero");
    auto ra = try_apply(op_a, x, y);
    auto rb = try_apply(op_b, x, y);
    if (!ra && !rb)
        return Outcome::Undefined;
    if (!ra || !rb)
        return Outcome::Fails;
    return value_of(*ra) == lambda * value_of(*rb) ? Outcome::Holds : Outcome::Fails;
}

Outcome kernel(OpKind op, const FracRep& x, const FracRep& y) {
    auto r = try_apply(op, x, y);
    if (!r)
        return Outcome::Undefined;
    return value_of(*r).is_zero() ? Outcome::Holds : Outcome::Fails;
}

Outcome commutes(OpKind op, const FracRep& x, const FracRep& y) {
    auto rxy = try_apply(op, x, y);
    auto ryx = try_apply(op, y, x);
    if (!rxy && !ryx)
        return Outcome::Undefined;
    if (!rxy || !ryx)
        return Outcome::Fails;
    return value_of(*rxy) == value_of(*ryx) ? Outcome::Holds : Outcome::Fails;
}

bool kernel_line_form_holds(const FracRep& x, const FracRep& y) {
    Rational coef = x.den / (y.den * y.den);
    return value_of(y) == -coef * value_of(x) - coef;
}

std::optional<Value> solve_partner(const FracRep& x, const Rational& lambda) {
    if (lambda.is_zero())
        throw std::invalid_argument("solve_partner: lambda must be nonzero");
    Value xv = value_of(x);
    if (lambda * xv == kOne)
        return std::nullopt;
    return xv / (lambda * xv - kOne);
}

Value harmonic_mean(const Rational& b, const Rational& beta) {
    if (b.sign() <= 0 || beta.sign() <= 0)
        throw std::domain_error("harmonic_mean: inputs must be positive");
    return kTwo * b * beta / (b + beta);
}

bool printed_form_available(const RelationId& rel) {
    const OpKind a = rel.op_a;
    const OpKind b = rel.op_b;
    switch (rel.kind) {
    case RelationKind::Agreement:
        // stated but garbled: add=dadd2 (stray half-square terms) and
        // mul=dadd1 ("+ =" with a missing summand); never stated: pairs
        // among the duals
        return unordered_is(rel, OpKind::Add, OpKind::Mul) ||
               unordered_is(rel, OpKind::Add, OpKind::DualMul) ||
               unordered_is(rel, OpKind::Mul, OpKind::DualMul) ||
               unordered_is(rel, OpKind::Mul, OpKind::DualAdd2);
    case RelationKind::Proportional:
        // garbled: add=dadd2 (no right-hand side) and mul=dadd2 (divides by a)
        return unordered_is(rel, OpKind::Add, OpKind::Mul) ||
               unordered_is(rel, OpKind::Add, OpKind::DualMul) ||
               unordered_is(rel, OpKind::Mul, OpKind::DualMul) ||
               unordered_is(rel, OpKind::Mul, OpKind::DualAdd1);
    case RelationKind::Kernel:
        return a != OpKind::DualMul; // no stated kernel form for dmul
    case RelationKind::Commutes:
        (void)b;
        return true; // add/mul/dmul are claimed to always commute
    }
    return false;
}

std::optional<bool> printed_condition(const RelationId& rel, const FracRep& x,
                                      const FracRep& y, const Rational* lambda) {
    if (!printed_form_available(rel))
        return std::nullopt;

    const Rational& a = x.num;
    const Rational& b = x.den;
    const Rational& al = y.num;
    const Rational& be = y.den;

    switch (rel.kind) {
    case RelationKind::Agreement:
        if (unordered_is(rel, OpKind::Add, OpKind::DualMul))
            return (al * b * b + a * be * be).is_zero();
        if (unordered_is(rel, OpKind::Add, OpKind::Mul)) {
            // a/b = alpha/(alpha - beta); alpha == beta admits no solution
            if (al == be)
                return false;
            return a * (al - be) == b * al;
        }
        if (unordered_is(rel, OpKind::Mul, OpKind::DualMul))
            return a * b * (al - be) == al * be * (b - a);
        if (unordered_is(rel, OpKind::Mul, OpKind::DualAdd2))
            return (b * b * (a + be) + be * be * (b + al) + al * be * b + a * b * be).is_zero();
        return std::nullopt;

    case RelationKind::Proportional: {
        if (lambda == nullptr)
            return std::nullopt;
        const Rational& lam = *lambda;
        if (unordered_is(rel, OpKind::Add, OpKind::DualMul))
            return ((a * b * be + al * be * b) * (kOne - lam) + a * be * be + al * b * b).is_zero();
        if (unordered_is(rel, OpKind::Add, OpKind::Mul)) {
            // y = x/(lambda*x - 1) for x != 1/lambda
            Value xv = value_of(x);
            if (lam * xv == kOne)
                return false;
            return value_of(y) == xv / (lam * xv - kOne);
        }
        if (unordered_is(rel, OpKind::Mul, OpKind::DualMul))
            return (a * b * (al - lam * be) + al * be * (a - lam * b)).is_zero();
        if (unordered_is(rel, OpKind::Mul, OpKind::DualAdd1))
            return a * b * (al - lam * be) + al * be * (a - lam * b * be) == lam * b * b * be;
        return std::nullopt;
    }

    case RelationKind::Kernel:
        switch (rel.op_a) {
        case OpKind::Add:
            return value_of(y) == -value_of(x);
        case OpKind::Mul:
            return value_of(x).is_zero() || value_of(y).is_zero();
        case OpKind::DualAdd1:
            return (a + be * al + b).is_zero();
        case OpKind::DualAdd2:
            return ((a + be) * (al + b)).is_zero();
        default:
            return std::nullopt;
        }

    case RelationKind::Commutes:
        switch (rel.op_a) {
        case OpKind::Add:
        case OpKind::Mul:
        case OpKind::DualMul:
            return true;
        case OpKind::DualAdd1:
            return al + be * (al - kOne) == a + b * (a - kOne);
        case OpKind::DualAdd2:
            return a * (b - kOne) - b == al * (be - kOne) - be;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

Outcome defining_condition(const RelationId& rel, const FracRep& x,
                           const FracRep& y, const Rational* lambda) {
    switch (rel.kind) {
    case RelationKind::Agreement:
        return agrees(rel.op_a, rel.op_b, x, y);
    case RelationKind::Proportional:
        if (lambda == nullptr)
            throw std::invalid_argument("defining_condition: proportional needs lambda");
        return proportional(rel.op_a, rel.op_b, *lambda, x, y);
    case RelationKind::Kernel:
        return kernel(rel.op_a, x, y);
    case RelationKind::Commutes:
        return commutes(rel.op_a, x, y);
    }
    return Outcome::Undefined;
}

} // namespace fracops
