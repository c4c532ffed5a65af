#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fracops/frac.hpp"

namespace fracops {

/// Three-valued result of a relation check. Undefined means the check could
/// not be evaluated because every needed operation result had a zero
/// denominator; it is an outcome, not an error.
enum class Outcome { Holds, Fails, Undefined };

std::string_view outcome_name(Outcome o); // "holds", "fails", "undefined"

enum class RelationKind { Agreement, Proportional, Kernel, Commutes };

/// Identifies one condition under test: an agreement or lambda-proportionality
/// between two operations (unordered pair), the kernel of one operation, or
/// its commutativity. Names: "add=mul", "dadd1=0", "comm:dadd1".
struct RelationId {
    RelationKind kind;
    OpKind op_a;
    OpKind op_b; // == op_a for Kernel/Commutes

    static RelationId agreement(OpKind a, OpKind b);
    static RelationId proportional(OpKind a, OpKind b);
    static RelationId kernel(OpKind op);
    static RelationId commutes(OpKind op);

    std::string name() const;
    static std::optional<RelationId> parse(std::string_view text);

    friend bool operator==(const RelationId&, const RelationId&) = default;
};

/// true iff the condition has a usable printed closed form in the catalog.
/// Garbled or never-stated forms are unavailable; their truth can only be
/// decided through the defining equations.
bool printed_form_available(const RelationId& rel);

/// Evaluates the cataloged closed form verbatim at <x, y> (and lambda for
/// proportionality). nullopt when no usable form exists. These forms are test
/// fixtures, not the source of truth: several are wrong, and the oracle
/// module's job is to find out which.
std::optional<bool> printed_condition(const RelationId& rel, const FracRep& x,
                                      const FracRep& y,
                                      const Rational* lambda = nullptr);

/// value_of(opA(x,y)) == value_of(opB(x,y)). Fails if exactly one side has a
/// zero denominator; Undefined if both do.
Outcome agrees(OpKind op_a, OpKind op_b, const FracRep& x, const FracRep& y);

/// value_of(opA(x,y)) == lambda * value_of(opB(x,y)); lambda must be nonzero.
Outcome proportional(OpKind op_a, OpKind op_b, const Rational& lambda,
                     const FracRep& x, const FracRep& y);

/// value_of(op(x,y)) == 0.
Outcome kernel(OpKind op, const FracRep& x, const FracRep& y);

/// value_of(op(x,y)) == value_of(op(y,x)).
Outcome commutes(OpKind op, const FracRep& x, const FracRep& y);

/// The line characterization of the dadd1 kernel: at a kernel point,
/// value_of(y) == -(b/beta^2) * value_of(x) - b/beta^2 with b = x.den,
/// beta = y.den.
bool kernel_line_form_holds(const FracRep& x, const FracRep& y);

/// The unique value v with value_of(x) + v == lambda * value_of(x) * v, or
/// nullopt when value_of(x) == 1/lambda (no partner exists). lambda != 0.
std::optional<Value> solve_partner(const FracRep& x, const Rational& lambda);

/// 2*b*beta / (b + beta); requires b, beta > 0 (throws std::domain_error).
Value harmonic_mean(const Rational& b, const Rational& beta);

/// Defining truth of a relation at a point, dispatching on the kind.
/// lambda is used only for Proportional.
Outcome defining_condition(const RelationId& rel, const FracRep& x,
                           const FracRep& y, const Rational* lambda = nullptr);

} // namespace fracops
