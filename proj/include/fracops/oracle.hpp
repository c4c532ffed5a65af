#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracops/grid.hpp"
#include "fracops/relations.hpp"
#include "fracops/structure.hpp"

namespace fracops {

enum class Verdict { Confirmed, Refuted, Vacuous, Unavailable, Skipped };
std::string_view verdict_name(Verdict v);

/// One grid point where the printed closed form disagrees with the defining
/// equation. defining != printed always; note marks auxiliary sub-checks
/// (currently only "line-form" for the dadd1 kernel).
struct Discrepancy {
    FracRep x;
    FracRep y;
    std::optional<Rational> lambda;
    bool defining;
    bool printed;
    std::string note;
};

struct RelationEntry {
    RelationId rel;
    std::optional<Rational> lambda;
    std::uint64_t points = 0;         // points where every needed result was defined
    std::uint64_t skipped = 0;        // points with a zero-denominator result
    std::uint64_t defining_holds = 0;
    std::uint64_t printed_holds = 0;
    std::uint64_t mismatches = 0;
    std::vector<Discrepancy> witnesses; // first 20 in grid order unless full dump
    Verdict verdict = Verdict::Unavailable;
    std::string note;
};

/// Dual-sum-of-second-kind on zero fractions versus the harmonic mean of the
/// denominators, over 1 <= b, beta <= 6.
struct HarmonicEntry {
    std::uint64_t points = 0;
    std::uint64_t printed_mismatches = 0; // value != H(b, beta)
    std::uint64_t halved_mismatches = 0;  // value != H(b, beta)/2
    Verdict verdict = Verdict::Refuted;
    std::string note;
};

struct DiscrepancyReport {
    GridSpec grid;
    std::vector<Rational> lambdas;
    std::vector<RelationEntry> entries;
    HarmonicEntry harmonic;
    std::vector<HomogeneityVerdict> homogeneity;
    std::vector<WellDefVerdict> welldef;
};

/// Compares the defining equation of rel against its printed closed form at
/// every grid point. Points where any needed operation result has a zero
/// denominator are tallied as skipped and excluded from the comparison.
RelationEntry verify_iff(const RelationId& rel, const GridSpec& grid,
                         const Rational* lambda = nullptr,
                         ExecMode mode = ExecMode::Serial,
                         bool full_witnesses = false);

/// All stated relations in catalog order, the harmonic-mean check, and the
/// structure-module classifications as appendix entries. Deterministic:
/// identical inputs give byte-identical serialized reports.
DiscrepancyReport full_report(const GridSpec& grid,
                              const std::vector<Rational>& lambdas,
                              ExecMode mode = ExecMode::Serial,
                              bool full_witnesses = false);

void write_report(std::ostream& os, const DiscrepancyReport& report);
std::string report_to_string(const DiscrepancyReport& report);

/// The stated relations, in report order: agreements, kernels, commutativity,
/// proportionalities.
std::vector<RelationId> stated_agreements();
std::vector<RelationId> stated_kernels();
std::vector<RelationId> stated_commutativity();
std::vector<RelationId> stated_proportionalities();

HarmonicEntry harmonic_check();

} // namespace fracops
