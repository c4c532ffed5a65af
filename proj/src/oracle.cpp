#include "fracops/oracle.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fracops {

namespace {

constexpr std::size_t kWitnessCap = 20;

struct OracleAcc {
    std::uint64_t points = 0, skipped = 0;
    std::uint64_t defining_holds = 0, printed_holds = 0, mismatches = 0;
    std::vector<std::pair<std::uint64_t, Discrepancy>> wits;
    std::size_t cap = kWitnessCap;

    void merge_from(OracleAcc&& o) {
        cap = std::max(cap, o.cap);
        points += o.points;
        skipped += o.skipped;
        defining_holds += o.defining_holds;
        printed_holds += o.printed_holds;
        mismatches += o.mismatches;
        for (auto& w : o.wits) {
            if (wits.size() >= cap)
                break;
            wits.push_back(std::move(w));
        }
    }
};

} // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Vacuous: return "Vacuous";
    case Verdict::Unavailable: return "Unavailable";
    case Verdict::Skipped: return "Skipped";
    }
    return "?";
}

RelationEntry verify_iff(const RelationId& rel, const GridSpec& grid,
                         const Rational* lambda, ExecMode mode,
                         bool full_witnesses) {
    if (rel.kind == RelationKind::Proportional && lambda == nullptr)
        throw std::invalid_argument("verify_iff: proportional relations need lambda");

    RelationEntry entry;
    entry.rel = rel;
    if (lambda)
        entry.lambda = *lambda;

    if (!printed_form_available(rel)) {
        entry.verdict = Verdict::Unavailable;
        entry.note = "no usable printed form";
        return entry;
    }

    const std::size_t cap =
        full_witnesses ? std::numeric_limits<std::size_t>::max() : kWitnessCap;
    const bool check_line_form =
        rel.kind == RelationKind::Kernel && rel.op_a == OpKind::DualAdd1;

    OracleAcc acc = grid_scan<OracleAcc>(
        grid, mode,
        [&](OracleAcc& A, std::uint64_t idx, const FracRep& x, const FracRep& y) {
            A.cap = cap;
            bool def = false;
            switch (rel.kind) {
            case RelationKind::Agreement:
            case RelationKind::Proportional: {
                auto ra = try_apply(rel.op_a, x, y);
                auto rb = try_apply(rel.op_b, x, y);
                if (!ra || !rb) {
                    ++A.skipped;
                    return;
                }
                def = rel.kind == RelationKind::Agreement
                          ? value_of(*ra) == value_of(*rb)
                          : value_of(*ra) == *lambda * value_of(*rb);
                break;
            }
            case RelationKind::Kernel: {
                auto r = try_apply(rel.op_a, x, y);
                if (!r) {
                    ++A.skipped;
                    return;
                }
                def = value_of(*r).is_zero();
                break;
            }
            case RelationKind::Commutes: {
                auto rxy = try_apply(rel.op_a, x, y);
                auto ryx = try_apply(rel.op_a, y, x);
                if (!rxy || !ryx) {
                    ++A.skipped;
                    return;
                }
                def = value_of(*rxy) == value_of(*ryx);
                break;
            }
            }
            ++A.points;
            const bool printed = *printed_condition(rel, x, y, lambda);
            A.defining_holds += def;
            A.printed_holds += printed;
            if (def != printed) {
                ++A.mismatches;
                if (A.wits.size() < A.cap)
                    A.wits.push_back(
                        {idx, Discrepancy{x, y, entry.lambda, def, printed, ""}});
            } else if (check_line_form && def && !kernel_line_form_holds(x, y)) {
                ++A.mismatches;
                if (A.wits.size() < A.cap)
                    A.wits.push_back(
                        {idx, Discrepancy{x, y, entry.lambda, true, false, "line-form"}});
            }
        });

    entry.points = acc.points;
    entry.skipped = acc.skipped;
    entry.defining_holds = acc.defining_holds;
    entry.printed_holds = acc.printed_holds;
    entry.mismatches = acc.mismatches;
    entry.witnesses.reserve(acc.wits.size());
    for (auto& [idx, d] : acc.wits) {
        (void)idx;
        entry.witnesses.push_back(std::move(d));
    }
    if (entry.mismatches > 0)
        entry.verdict = Verdict::Refuted;
    else if (entry.defining_holds == 0)
        entry.verdict = Verdict::Vacuous;
    else
        entry.verdict = Verdict::Confirmed;
    return entry;
}

std::vector<RelationId> stated_agreements() {
    return {
        RelationId::agreement(OpKind::Add, OpKind::Mul),
        RelationId::agreement(OpKind::Add, OpKind::DualMul),
        RelationId::agreement(OpKind::Add, OpKind::DualAdd2),  // garbled form
        RelationId::agreement(OpKind::Mul, OpKind::DualMul),
        RelationId::agreement(OpKind::Mul, OpKind::DualAdd1),  // garbled form
        RelationId::agreement(OpKind::Mul, OpKind::DualAdd2),
    };
}

std::vector<RelationId> stated_kernels() {
    return {
        RelationId::kernel(OpKind::Add),
        RelationId::kernel(OpKind::Mul),
        RelationId::kernel(OpKind::DualAdd1),
        RelationId::kernel(OpKind::DualAdd2),
    };
}

std::vector<RelationId> stated_commutativity() {
    std::vector<RelationId> out;
    for (OpKind op : kAllOps)
        out.push_back(RelationId::commutes(op));
    return out;
}

std::vector<RelationId> stated_proportionalities() {
    return {
        RelationId::proportional(OpKind::Add, OpKind::Mul),
        RelationId::proportional(OpKind::Add, OpKind::DualMul),
        RelationId::proportional(OpKind::Add, OpKind::DualAdd2),  // no right-hand side
        RelationId::proportional(OpKind::Mul, OpKind::DualMul),
        RelationId::proportional(OpKind::Mul, OpKind::DualAdd1),
        RelationId::proportional(OpKind::Mul, OpKind::DualAdd2),  // divides by a
    };
}

HarmonicEntry harmonic_check() {
    HarmonicEntry entry;
    const Rational half{BigInt{1}, BigInt{2}};
    for (long long b = 1; b <= 6; ++b)
        for (long long be = 1; be <= 6; ++be) {
            ++entry.points;
            Value v = value_of(apply(OpKind::DualAdd2, make_rep(0, b), make_rep(0, be)));
            Value h = harmonic_mean(Rational{b}, Rational{be});
            if (v != h)
                ++entry.printed_mismatches;
            if (v != half * h)
                ++entry.halved_mismatches;
        }
    entry.verdict = entry.printed_mismatches > 0 ? Verdict::Refuted : Verdict::Confirmed;
    if (entry.printed_mismatches == entry.points && entry.halved_mismatches == 0)
        entry.note = "claimed '= H(b,beta)' is off by the factor 2: the value "
                     "equals H(b,beta)/2 at every point";
    return entry;
}

DiscrepancyReport full_report(const GridSpec& grid,
                              const std::vector<Rational>& lambdas, ExecMode mode,
                              bool full_witnesses) {
    DiscrepancyReport report;
    report.grid = grid;
    report.lambdas = lambdas;

    for (const RelationId& rel : stated_agreements())
        report.entries.push_back(verify_iff(rel, grid, nullptr, mode, full_witnesses));
    for (const RelationId& rel : stated_kernels())
        report.entries.push_back(verify_iff(rel, grid, nullptr, mode, full_witnesses));
    for (const RelationId& rel : stated_commutativity())
        report.entries.push_back(verify_iff(rel, grid, nullptr, mode, full_witnesses));
    for (const RelationId& rel : stated_proportionalities()) {
        if (lambdas.empty()) {
            RelationEntry entry;
            entry.rel = rel;
            entry.verdict = Verdict::Skipped;
            entry.note = "no lambda values supplied";
            report.entries.push_back(std::move(entry));
            continue;
        }
        for (const Rational& lam : lambdas)
            report.entries.push_back(verify_iff(rel, grid, &lam, mode, full_witnesses));
    }

    report.harmonic = harmonic_check();
    for (OpKind op : kAllOps)
        report.homogeneity.push_back(classify_homogeneity(op));
    for (OpKind op : kAllOps)
        report.welldef.push_back(classify_welldef(op, grid.den_bound,
                                                  default_scalar_pairs(), mode));
    return report;
}

namespace {

std::string lambda_str(const std::optional<Rational>& lambda) {
    return lambda ? lambda->str() : "";
}

void write_entry(std::ostream& os, const RelationEntry& e) {
    os << "relation id=" << e.rel.name();
    switch (e.rel.kind) {
    case RelationKind::Agreement: os << " kind=agreement"; break;
    case RelationKind::Proportional: os << " kind=proportional"; break;
    case RelationKind::Kernel: os << " kind=kernel"; break;
    case RelationKind::Commutes: os << " kind=commutes"; break;
    }
    os << " lambda=" << lambda_str(e.lambda) << " points=" << e.points
       << " skipped=" << e.skipped << " defining_holds=" << e.defining_holds
       << " printed_holds=" << e.printed_holds << " mismatches=" << e.mismatches
       << " verdict=" << verdict_name(e.verdict);
    if (!e.note.empty())
        os << " note=\"" << e.note << "\"";
    os << "\n";
    for (const Discrepancy& d : e.witnesses) {
        os << "  mismatch x=" << rep_str(d.x) << " y=" << rep_str(d.y)
           << " lambda=" << lambda_str(d.lambda)
           << " defining=" << (d.defining ? "true" : "false")
           << " printed=" << (d.printed ? "true" : "false");
        if (!d.note.empty())
            os << " note=" << d.note;
        os << "\n";
    }
}

} // namespace

void write_report(std::ostream& os, const DiscrepancyReport& report) {
    os << "verify-report\n";
    os << "grid num_bound=" << report.grid.num_bound
       << " den_bound=" << report.grid.den_bound
       << " raw_points=" << report.grid.total_points() << "\n";
    os << "lambdas=";
    for (std::size_t i = 0; i < report.lambdas.size(); ++i)
        os << (i ? "," : "") << report.lambdas[i].str();
    os << "\n";

    for (const RelationEntry& e : report.entries)
        write_entry(os, e);

    const HarmonicEntry& h = report.harmonic;
    os << "relation id=dadd2-harmonic kind=special points=" << h.points
       << " printed_mismatches=" << h.printed_mismatches
       << " halved_mismatches=" << h.halved_mismatches
       << " verdict=" << verdict_name(h.verdict);
    if (!h.note.empty())
        os << " note=\"" << h.note << "\"";
    os << "\n";

    for (const HomogeneityVerdict& v : report.homogeneity) {
        os << "appendix homogeneity op=" << op_name(v.op) << " degree=";
        if (v.degree)
            os << *v.degree << (v.positive_only ? " positive_only=true" : "");
        else
            os << "none";
        if (v.witness)
            os << " witness t=" << v.witness->t.str() << " x=" << rep_str(v.witness->x)
               << " y=" << rep_str(v.witness->y) << " lhs=" << v.witness->lhs.str()
               << " rhs=" << v.witness->rhs.str();
        os << "\n";
    }
    for (const WellDefVerdict& v : report.welldef) {
        os << "appendix welldef op=" << op_name(v.op)
           << " class=" << invariance_class_name(v.cls);
        if (!v.condition.empty())
            os << " condition=\"" << v.condition << "\""
               << " condition_verified=" << (v.condition_verified ? "true" : "false");
        os << " checks=" << v.checks << " violations=" << v.violations
           << " skipped=" << v.skipped << " invariant_pairs=" << v.invariant_pairs;
        if (!v.witnesses.empty()) {
            const InvarianceWitness& w = v.witnesses.front();
            os << " witness x=" << rep_str(w.x) << " y=" << rep_str(w.y)
               << " s=" << w.s.str() << " t=" << w.t.str()
               << " base=" << w.base.str() << " rescaled=" << w.rescaled.str();
        }
        if (!v.note.empty())
            os << " note=\"" << v.note << "\"";
        os << "\n";
    }
}

std::string report_to_string(const DiscrepancyReport& report) {
    std::ostringstream os;
    write_report(os, report);
    return os.str();
}

} // namespace fracops
