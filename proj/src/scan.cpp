#include "fracops/scan.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace fracops {

namespace {

struct ScanAcc {
    std::vector<std::pair<std::uint64_t, ScanRecord>> hits;

    void merge_from(ScanAcc&& o) {
        hits.insert(hits.end(), std::make_move_iterator(o.hits.begin()),
                    std::make_move_iterator(o.hits.end()));
    }
};

} // namespace

std::vector<ScanRecord> enumerate_solutions(const RelationId& rel,
                                            const GridSpec& grid,
                                            const Rational* lambda, ExecMode mode) {
    if (rel.kind == RelationKind::Proportional && lambda == nullptr)
        throw std::invalid_argument("enumerate_solutions: proportional relations need lambda");
    std::optional<Rational> lam;
    if (lambda)
        lam = *lambda;

    ScanAcc acc = grid_scan<ScanAcc>(
        grid, mode,
        [&](ScanAcc& A, std::uint64_t idx, const FracRep& x, const FracRep& y) {
            switch (rel.kind) {
            case RelationKind::Agreement:
            case RelationKind::Proportional: {
                auto ra = try_apply(rel.op_a, x, y);
                auto rb = try_apply(rel.op_b, x, y);
                if (!ra || !rb)
                    return;
                Value va = value_of(*ra);
                Value vb = value_of(*rb);
                const bool hit = rel.kind == RelationKind::Agreement
                                     ? va == vb
                                     : va == *lambda * vb;
                if (hit)
                    A.hits.push_back(
                        {idx, ScanRecord{x, y, lam, rel, std::move(va), std::move(vb)}});
                return;
            }
            case RelationKind::Kernel: {
                auto r = try_apply(rel.op_a, x, y);
                if (!r)
                    return;
                Value v = value_of(*r);
                if (v.is_zero())
                    A.hits.push_back(
                        {idx, ScanRecord{x, y, lam, rel, std::move(v), Value{}}});
                return;
            }
            case RelationKind::Commutes: {
                auto rxy = try_apply(rel.op_a, x, y);
                auto ryx = try_apply(rel.op_a, y, x);
                if (!rxy || !ryx)
                    return;
                Value va = value_of(*rxy);
                Value vb = value_of(*ryx);
                if (va == vb)
                    A.hits.push_back(
                        {idx, ScanRecord{x, y, lam, rel, std::move(va), std::move(vb)}});
                return;
            }
            }
        });

    std::vector<ScanRecord> out;
    out.reserve(acc.hits.size());
    for (auto& [idx, rec] : acc.hits) {
        (void)idx;
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<std::pair<FracRep, FracRep>> gen_family(const Rational& b,
                                                      const Rational& beta,
                                                      const Rational& c) {
    if (b.is_zero() || beta.is_zero())
        throw std::invalid_argument("gen_family: b and beta must be nonzero");
    if ((b + c).is_zero() || c == beta)
        return std::nullopt;
    FracRep x{c * b / (b + c), b};
    FracRep y{c * beta / (c - beta), beta};
    // generators are not trusted: the pair must pass the relation it claims
    if (agrees(OpKind::Mul, OpKind::DualMul, x, y) != Outcome::Holds)
        return std::nullopt;
    return std::make_pair(std::move(x), std::move(y));
}

namespace {

void write_tabular(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << "a,b,alpha,beta,lambda,relation,lhs,rhs\n";
    for (const ScanRecord& r : records) {
        os << r.x.num.str() << ',' << r.x.den.str() << ',' << r.y.num.str() << ','
           << r.y.den.str() << ',' << (r.lambda ? r.lambda->str() : "") << ','
           << r.rel.name() << ',' << r.lhs.str() << ',' << r.rhs.str() << '\n';
    }
}

void write_lines(std::ostream& os, const std::vector<ScanRecord>& records) {
    for (const ScanRecord& r : records) {
        os << "a=" << r.x.num.str() << " b=" << r.x.den.str()
           << " alpha=" << r.y.num.str() << " beta=" << r.y.den.str()
           << " lambda=" << (r.lambda ? r.lambda->str() : "")
           << " relation=" << r.rel.name() << " lhs=" << r.lhs.str()
           << " rhs=" << r.rhs.str() << '\n';
    }
}

} // namespace

void write_records(std::ostream& os, const std::vector<ScanRecord>& records,
                   ScanFormat format) {
    if (format == ScanFormat::Tabular)
        write_tabular(os, records);
    else
        write_lines(os, records);
    os.flush();
    if (!os)
        throw std::runtime_error("write_records: stream failure");
}

} // namespace fracops
