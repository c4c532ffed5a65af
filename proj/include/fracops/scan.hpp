#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "fracops/grid.hpp"
#include "fracops/relations.hpp"

namespace fracops {

/// One grid point satisfying a relation, with the two operation results
/// (equal for agreements, equal up to the lambda factor for proportionality,
/// and paired with zero for kernels).
struct ScanRecord {
    FracRep x;
    FracRep y;
    std::optional<Rational> lambda;
    RelationId rel;
    Value lhs;
    Value rhs;
};

/// Exactly the grid points where the defining relation holds, in grid order;
/// points with undefined results are skipped. Output is identical for the
/// serial and parallel paths.
std::vector<ScanRecord> enumerate_solutions(const RelationId& rel,
                                            const GridSpec& grid,
                                            const Rational* lambda = nullptr,
                                            ExecMode mode = ExecMode::Serial);

/// A self-checking generator for mul=dmul agreement points: for parameters
/// (b, beta, c) it builds x = <cb/(b+c), b>, y = <c*beta/(c-beta), beta>.
/// Returns nullopt when the construction is degenerate (b+c == 0, c == beta,
/// or the pair fails its own agreement check). b, beta must be nonzero.
std::optional<std::pair<FracRep, FracRep>> gen_family(const Rational& b,
                                                      const Rational& beta,
                                                      const Rational& c);

enum class ScanFormat { Tabular, Lines };

/// Tabular: header "a,b,alpha,beta,lambda,relation,lhs,rhs" then one CSV row
/// per record. Lines: one self-describing "key=value" record per line with
/// the same fields. Integer-valued cells render bare; other rationals as p/q.
void write_records(std::ostream& os, const std::vector<ScanRecord>& records,
                   ScanFormat format);

} // namespace fracops
