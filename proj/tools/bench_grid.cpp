// Times the serial reference path against the OpenMP path on the verify and
// scan workloads, and checks they produce identical output while at it.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fracops/oracle.hpp"
#include "fracops/scan.hpp"

using namespace fracops;

namespace {

double seconds(void (*fn)(ExecMode, std::string&), ExecMode mode, std::string& out) {
    auto start = std::chrono::steady_clock::now();
    fn(mode, out);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void run_verify(ExecMode mode, std::string& out) {
    GridSpec grid{4, 4};
    const std::vector<Rational> lambdas = {Rational{-1}, Rational{2},
                                           Rational{BigInt{1}, BigInt{2}}};
    out = report_to_string(full_report(grid, lambdas, mode));
}

void run_scan(ExecMode mode, std::string& out) {
    GridSpec grid{8, 8};
    auto rel = RelationId::agreement(OpKind::Add, OpKind::DualMul);
    auto records = enumerate_solutions(rel, grid, nullptr, mode);
    out = std::to_string(records.size());
}

void bench(const char* name, void (*fn)(ExecMode, std::string&)) {
    std::string serial_out, parallel_out;
    double s = seconds(fn, ExecMode::Serial, serial_out);
    double p = seconds(fn, ExecMode::Parallel, parallel_out);
    std::printf("%-8s serial %7.3fs  parallel %7.3fs  speedup %.2fx  outputs %s\n",
                name, s, p, s / p, serial_out == parallel_out ? "match" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif
    bench("verify", run_verify);
    bench("scan", run_scan);
    return 0;
}
