#include "fracops/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "fracops/oracle.hpp"
#include "fracops/parser.hpp"
#include "fracops/scan.hpp"
#include "fracops/structure.hpp"

namespace fracops::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kEvalError = 3;

const char* kUsageText =
    "usage: fracops <command> [args]\n"
    "\n"
    "commands:\n"
    "  eval <expr>                     evaluate an expression, print rep and value\n"
    "  check <relation> <x> <y> [--lambda p/q]\n"
    "                                  test a relation at a point (holds/fails/undefined)\n"
    "  scan <relation> [--num-bound N] [--den-bound D] [--lambda p/q]\n"
    "       [--format tabular|lines] [--out FILE]\n"
    "                                  enumerate grid points satisfying a relation\n"
    "  verify [--num-bound N] [--den-bound D] [--full-witnesses]\n"
    "                                  check every cataloged closed form against its\n"
    "                                  defining equation and print the report\n"
    "  classify <op> (--homogeneity | --welldef)\n"
    "                                  classify one operation\n"
    "  repl                            line-oriented eval loop\n"
    "\n"
    "operations: add(+), mul(*), dmul(@*), dadd1(@+), dadd2(@#)\n"
    "relations:  <op>=<op> (agreement; with --lambda: proportionality),\n"
    "            <op>=0 (kernel), comm:<op> (commutativity)\n";

struct ParsedArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options; // --name value
    std::map<std::string, bool> flags;          // --name
};

const std::map<std::string, bool, std::less<>> kValueOptions = {
    {"--lambda", true},  {"--num-bound", true},    {"--den-bound", true},
    {"--format", true},  {"--out", true},          {"--full-witnesses", false},
    {"--homogeneity", false}, {"--welldef", false},
};

std::optional<ParsedArgs> parse_args(const std::vector<std::string>& args,
                                     std::size_t from, std::ostream& err) {
    ParsedArgs out;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) {
            out.positional.push_back(a);
            continue;
        }
        auto it = kValueOptions.find(a);
        if (it == kValueOptions.end()) {
            err << "unknown option: " << a << "\n";
            return std::nullopt;
        }
        if (!it->second) {
            out.flags[a] = true;
            continue;
        }
        if (i + 1 >= args.size()) {
            err << "option " << a << " needs a value\n";
            return std::nullopt;
        }
        out.options[a] = args[++i];
    }
    return out;
}

std::optional<FracRep> parse_rep_arg(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return make_rep(Rational{BigInt{text}}, Rational{1});
        return make_rep(Rational{BigInt{text.substr(0, slash)}},
                        Rational{BigInt{text.substr(slash + 1)}});
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<Rational> parse_rational_arg(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<int> parse_bound(const ParsedArgs& parsed, const std::string& name,
                               int fallback, std::ostream& err) {
    auto it = parsed.options.find(name);
    if (it == parsed.options.end())
        return fallback;
    try {
        int v = std::stoi(it->second);
        if (v < 0 || v > 1000)
            throw std::out_of_range("bound");
        return v;
    } catch (const std::exception&) {
        err << name << " must be a small nonnegative integer\n";
        return std::nullopt;
    }
}

int print_eval(const std::string& text, std::ostream& out, std::ostream& err) {
    try {
        auto expr = parse_expr(text);
        EvalResult r = eval_expr(*expr);
        out << "rep = " << rep_str(r.rep) << ", value = " << r.value.str() << "\n";
        return kOk;
    } catch (const syntax_error& e) {
        err << "syntax error at byte " << e.offset << ": " << e.what() << "\n";
        return kUsage;
    } catch (const eval_zero_denominator& e) {
        err << "zero denominator at bytes " << e.span.begin << ".." << e.span.end
            << "\n";
        return kEvalError;
    } catch (const zero_denominator_error& e) {
        err << "zero denominator: " << e.what() << "\n";
        return kEvalError;
    }
}

int cmd_eval(const ParsedArgs& parsed, std::ostream& out, std::ostream& err) {
    if (parsed.positional.size() != 1) {
        err << "eval needs exactly one expression argument\n";
        return kUsage;
    }
    return print_eval(parsed.positional[0], out, err);
}

std::string side_str(OpKind op, const FracRep& x, const FracRep& y) {
    auto r = try_apply(op, x, y);
    return r ? value_of(*r).str() : "undefined";
}

int cmd_check(const ParsedArgs& parsed, std::ostream& out, std::ostream& err) {
    if (parsed.positional.size() != 3) {
        err << "check needs <relation> <x> <y>\n";
        return kUsage;
    }
    auto rel = RelationId::parse(parsed.positional[0]);
    auto x = parse_rep_arg(parsed.positional[1]);
    auto y = parse_rep_arg(parsed.positional[2]);
    if (!rel || !x || !y) {
        err << "bad relation or fraction argument\n";
        return kUsage;
    }
    std::optional<Rational> lambda;
    if (auto it = parsed.options.find("--lambda"); it != parsed.options.end()) {
        lambda = parse_rational_arg(it->second);
        if (!lambda || lambda->is_zero()) {
            err << "--lambda must be a nonzero rational\n";
            return kUsage;
        }
        if (rel->kind != RelationKind::Agreement) {
            err << "--lambda applies only to <op>=<op> relations\n";
            return kUsage;
        }
        rel->kind = RelationKind::Proportional;
    }

    Outcome o = defining_condition(*rel, *x, *y, lambda ? &*lambda : nullptr);

    std::string lhs, rhs;
    switch (rel->kind) {
    case RelationKind::Agreement:
    case RelationKind::Proportional:
        lhs = side_str(rel->op_a, *x, *y);
        rhs = side_str(rel->op_b, *x, *y);
        if (lambda)
            rhs = lambda->str() + " * " + rhs;
        break;
    case RelationKind::Kernel:
        lhs = side_str(rel->op_a, *x, *y);
        rhs = "0";
        break;
    case RelationKind::Commutes:
        lhs = side_str(rel->op_a, *x, *y);
        rhs = side_str(rel->op_a, *y, *x);
        break;
    }

    switch (o) {
    case Outcome::Holds:
        out << "holds (" << lhs << " = " << rhs << ")\n";
        return kOk;
    case Outcome::Fails:
        out << "fails (" << lhs << " vs " << rhs << ")\n";
        return kCheckFailed;
    case Outcome::Undefined:
        out << "undefined (zero denominator)\n";
        return kEvalError;
    }
    return kEvalError;
}

int cmd_scan(const ParsedArgs& parsed, std::ostream& out, std::ostream& err) {
    if (parsed.positional.size() != 1) {
        err << "scan needs exactly one <relation> argument\n";
        return kUsage;
    }
    auto rel = RelationId::parse(parsed.positional[0]);
    if (!rel) {
        err << "bad relation argument\n";
        return kUsage;
    }
    auto num_bound = parse_bound(parsed, "--num-bound", 4, err);
    auto den_bound = parse_bound(parsed, "--den-bound", 4, err);
    if (!num_bound || !den_bound)
        return kUsage;

    std::optional<Rational> lambda;
    if (auto it = parsed.options.find("--lambda"); it != parsed.options.end()) {
        lambda = parse_rational_arg(it->second);
        if (!lambda || lambda->is_zero()) {
            err << "--lambda must be a nonzero rational\n";
            return kUsage;
        }
        if (rel->kind != RelationKind::Agreement) {
            err << "--lambda applies only to <op>=<op> relations\n";
            return kUsage;
        }
        rel->kind = RelationKind::Proportional;
    }

    ScanFormat format = ScanFormat::Tabular;
    if (auto it = parsed.options.find("--format"); it != parsed.options.end()) {
        if (it->second == "tabular")
            format = ScanFormat::Tabular;
        else if (it->second == "lines")
            format = ScanFormat::Lines;
        else {
            err << "--format must be tabular or lines\n";
            return kUsage;
        }
    }

    GridSpec grid{*num_bound, *den_bound};
    auto records =
        enumerate_solutions(*rel, grid, lambda ? &*lambda : nullptr, ExecMode::Parallel);

    try {
        if (auto it = parsed.options.find("--out"); it != parsed.options.end()) {
            std::ofstream file(it->second);
            if (!file) {
                err << "cannot open " << it->second << "\n";
                return kEvalError;
            }
            write_records(file, records, format);
        } else {
            write_records(out, records, format);
        }
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return kEvalError;
    }
    return kOk;
}

int cmd_verify(const ParsedArgs& parsed, std::ostream& out, std::ostream& err) {
    if (!parsed.positional.empty()) {
        err << "verify takes no positional arguments\n";
        return kUsage;
    }
    auto num_bound = parse_bound(parsed, "--num-bound", 4, err);
    auto den_bound = parse_bound(parsed, "--den-bound", 4, err);
    if (!num_bound || !den_bound)
        return kUsage;
    const bool full = parsed.flags.count("--full-witnesses") > 0;

    GridSpec grid{*num_bound, *den_bound};
    const std::vector<Rational> lambdas = {Rational{-1}, Rational{2},
                                           Rational{BigInt{1}, BigInt{2}}};
    DiscrepancyReport report = full_report(grid, lambdas, ExecMode::Parallel, full);
    write_report(out, report);
    return kOk;
}

int cmd_classify(const ParsedArgs& parsed, std::ostream& out, std::ostream& err) {
    if (parsed.positional.size() != 1) {
        err << "classify needs exactly one <op> argument\n";
        return kUsage;
    }
    auto op = parse_op(parsed.positional[0]);
    if (!op) {
        err << "unknown operation: " << parsed.positional[0] << "\n";
        return kUsage;
    }
    const bool hom = parsed.flags.count("--homogeneity") > 0;
    const bool wd = parsed.flags.count("--welldef") > 0;
    if (hom == wd) {
        err << "classify needs exactly one of --homogeneity / --welldef\n";
        return kUsage;
    }

    if (hom) {
        HomogeneityVerdict v = classify_homogeneity(*op);
        if (v.degree) {
            out << "homogeneous of degree " << *v.degree;
            if (v.positive_only)
                out << " (positive scalars only)";
            out << "\n";
        } else {
            const HomogeneityWitness& w = *v.witness;
            out << "not homogeneous; witness t=" << w.t.str() << ", x=" << rep_str(w.x)
                << ", y=" << rep_str(w.y) << ": " << w.lhs.str() << " vs "
                << w.rhs.str() << "\n";
        }
        return kOk;
    }

    WellDefVerdict v = classify_welldef(*op, ExecMode::Parallel);
    switch (v.cls) {
    case InvarianceClass::AlwaysInvariant:
        out << "always invariant (0 violations in " << v.checks << " checks)\n";
        return kOk;
    case InvarianceClass::DiagonalInvariant:
        out << "diagonally invariant (invariant exactly when s = t)\n";
        return kOk;
    case InvarianceClass::ConditionalInvariant: {
        const InvarianceWitness& w = v.witnesses.front();
        out << "conditionally invariant: " << v.condition << "; witness x="
            << rep_str(w.x) << ", y=" << rep_str(w.y) << ", s=" << w.s.str()
            << ", t=" << w.t.str() << ": " << w.rescaled.str() << " vs "
            << w.base.str() << "\n";
        if (!v.note.empty())
            out << "note: " << v.note << "\n";
        return kOk;
    }
    case InvarianceClass::NeverInvariant: {
        const InvarianceWitness& w = v.witnesses.front();
        out << "never invariant; witness x=" << rep_str(w.x) << ", y=" << rep_str(w.y)
            << ", s=" << w.s.str() << ", t=" << w.t.str() << ": " << w.rescaled.str()
            << " vs " << w.base.str() << "\n";
        return kOk;
    }
    }
    return kEvalError;
}

int cmd_repl(std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string text = line.substr(a, b - a + 1);
        if (text == "quit" || text == "exit")
            break;
        print_eval(text, out, err);
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    if (args.empty()) {
        err << kUsageText;
        return kUsage;
    }
    const std::string& cmd = args[0];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        out << kUsageText;
        return kOk;
    }
    auto parsed = parse_args(args, 1, err);
    if (!parsed)
        return kUsage;

    try {
        if (cmd == "eval")
            return cmd_eval(*parsed, out, err);
        if (cmd == "check")
            return cmd_check(*parsed, out, err);
        if (cmd == "scan")
            return cmd_scan(*parsed, out, err);
        if (cmd == "verify")
            return cmd_verify(*parsed, out, err);
        if (cmd == "classify")
            return cmd_classify(*parsed, out, err);
        if (cmd == "repl")
            return cmd_repl(in, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kEvalError;
    }
    err << "unknown command: " << cmd << "\n" << kUsageText;
    return kUsage;
}

} // namespace fracops::cli
