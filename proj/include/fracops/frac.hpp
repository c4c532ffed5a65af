#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fracops/errors.hpp"
#include "fracops/rational.hpp"

namespace fracops {

/// Canonical value of a fraction representation (reduced, positive denominator).
using Value = Rational;

/// The five binary operations.
enum class OpKind { Add, Mul, DualMul, DualAdd1, DualAdd2 };

inline constexpr std::array<OpKind, 5> kAllOps = {
    OpKind::Add, OpKind::Mul, OpKind::DualMul, OpKind::DualAdd1, OpKind::DualAdd2};

std::string_view op_name(OpKind op);  // "add", "mul", "dmul", "dadd1", "dadd2"
std::string_view op_token(OpKind op); // "+", "*", "@*", "@+", "@#"
/// Accepts either the name or the token spelling.
std::optional<OpKind> parse_op(std::string_view text);

/// An unreduced fraction representation: an ordered pair <num, den>, den != 0.
/// Components are exact rationals and are stored exactly as given; distinct
/// representations of the same value stay distinct (2/4 is not 1/2, 1/-2 is
/// not -1/2). The dual operations depend on this.
struct FracRep {
    Rational num;
    Rational den;

    FracRep(Rational num_, Rational den_);
};

FracRep make_rep(Rational num, Rational den);
FracRep make_rep(long long num, long long den);

/// a/b and alpha/beta denote the same rational: a*beta - b*alpha == 0.
bool frac_eq(const FracRep& x, const FracRep& y);

/// Fields equal componentwise (stronger than frac_eq).
bool rep_identical(const FracRep& x, const FracRep& y);

/// The canonical Value of the representation; constant on frac_eq classes.
Value value_of(const FracRep& x);

/// Applies op to <a,b> and <alpha,beta>:
///   Add      -> <a*beta + alpha*b, b*beta>
///   Mul      -> <a*alpha, b*beta>
///   DualMul  -> <a + alpha, b + beta>
///   DualAdd1 -> <a + beta*alpha + b, b + beta>
///   DualAdd2 -> <(a + beta)*(alpha + b), b + beta>
/// The result is a representation; nothing is reduced. Throws
/// zero_denominator_error when the result denominator is zero (only possible
/// for the three dual operations, at b + beta == 0).
FracRep apply(OpKind op, const FracRep& x, const FracRep& y);

/// apply() without the throw: nullopt when the result denominator vanishes.
std::optional<FracRep> try_apply(OpKind op, const FracRep& x, const FracRep& y);

/// <t*a, b>: scales the value by t, leaving the denominator alone.
FracRep scale_value(const Rational& t, const FracRep& x);

/// <t*a, t*b>: changes the representation, never the value. Throws
/// zero_scale_error when t == 0.
FracRep rescale(const Rational& t, const FracRep& x);

/// num/den with non-integer components parenthesized, e.g. "1/-2", "(3/2)/4".
std::string rep_str(const FracRep& x);

} // namespace fracops
