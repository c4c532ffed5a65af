#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracops/grid.hpp"
#include "fracops/relations.hpp"

namespace fracops {

// -------------------------------------------------------------------------
// Homogeneity: does op(t*x, t*y) == t^k * op(x, y) at the value level, where
// t*x scales the numerator only?
// -------------------------------------------------------------------------

struct HomogeneitySample {
    Rational t;
    FracRep x;
    FracRep y;
};

/// A simple probe (t=2 on 1/1, 1/1) followed by the full sweep over
/// t in {-2, -1, 1/2, 2, 3} and integer reps with |num| <= 3, 1 <= den <= 3.
/// The probe leads so that a failing verdict's witness is the smallest
/// readable case, not a sweep corner.
std::vector<HomogeneitySample> default_homogeneity_sample();

struct HomogeneityWitness {
    Rational t;
    FracRep x;
    FracRep y;
    Value lhs; // value of op(t*x, t*y)
    Value rhs; // t^1 * value of op(x, y), the linear prediction
};

struct HomogeneityVerdict {
    OpKind op;
    std::optional<int> degree; // nullopt: not homogeneous
    bool positive_only = false;
    std::optional<HomogeneityWitness> witness; // first degree-1 failure, when degree is nullopt
    std::uint64_t samples = 0;
    std::uint64_t skipped = 0;
};

/// Holds iff value_of(op(scale_value(t,x), scale_value(t,y))) == t^k * value_of(op(x,y)).
/// Undefined when either application has a zero denominator. t must be nonzero.
Outcome homogeneity_check(OpKind op, int k, const Rational& t, const FracRep& x,
                          const FracRep& y);

/// The unique degree in {0,1,2,3} passing every sample, or nullopt with the
/// first failing witness. A degree that only negative t breaks is reported
/// with positive_only set.
HomogeneityVerdict classify_homogeneity(OpKind op,
                                        const std::vector<HomogeneitySample>& sample);
HomogeneityVerdict classify_homogeneity(OpKind op); // default sample

// -------------------------------------------------------------------------
// Well-definedness: is the operation's value unchanged when the operands are
// rescaled (num and den both multiplied by a nonzero scalar)?
// -------------------------------------------------------------------------

enum class InvarianceClass {
    AlwaysInvariant,
    DiagonalInvariant,     // invariant exactly when s == t
    ConditionalInvariant,  // invariant on a described locus
    NeverInvariant         // no pair passes every sampled scalar pair
};

std::string_view invariance_class_name(InvarianceClass c);

struct InvarianceWitness {
    FracRep x;
    FracRep y;
    Rational s;
    Rational t;
    Value base;     // value of op(x, y)
    Value rescaled; // value of op(rescale(s,x), rescale(t,y))
};

struct WellDefVerdict {
    OpKind op;
    InvarianceClass cls;
    std::string condition;         // locus description for ConditionalInvariant
    bool condition_verified = false; // description matched the search exactly
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;       // rescaled or base denominator vanished
    std::uint64_t invariant_pairs = 0;
    std::vector<InvarianceWitness> witnesses;
    std::string note;
};

/// Holds iff value_of(op(rescale(s,x), rescale(t,y))) == value_of(op(x,y));
/// Undefined when either side has a zero denominator. s, t nonzero.
Outcome rep_invariance_check(OpKind op, const FracRep& x, const FracRep& y,
                             const Rational& s, const Rational& t);

/// (s, t) over {1, -1, 2, 3, 1/2}^2; pairs producing zero rescaled
/// denominators are skipped point by point during classification.
std::vector<std::pair<Rational, Rational>> default_scalar_pairs();

/// Exhaustive search over the bound x bound integer grid and the scalar set.
/// Witness order: two fixed probes first ((1/1,1/1,s=t=2) and
/// (1/2,1/3,s=1,t=2)), then sweep failures in grid order.
WellDefVerdict classify_welldef(OpKind op, int bound,
                                const std::vector<std::pair<Rational, Rational>>& scalars,
                                ExecMode mode = ExecMode::Serial);
WellDefVerdict classify_welldef(OpKind op, ExecMode mode = ExecMode::Serial);

} // namespace fracops
