#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fracops/frac.hpp"

namespace fracops {

/// Rectangular scan domain over integer representations: numerators in
/// -num_bound..num_bound, denominators in -den_bound..-1, 1..den_bound.
/// Points are ordered lexicographically by (a, b, alpha, beta); the flat
/// index of a point is stable across runs and worker counts.
struct GridSpec {
    int num_bound = 4;
    int den_bound = 4;

    std::uint64_t total_points() const {
        auto nums = static_cast<std::uint64_t>(2 * num_bound + 1);
        auto dens = static_cast<std::uint64_t>(2 * den_bound);
        return nums * nums * dens * dens;
    }

    void decode(std::uint64_t idx, long long& a, long long& b, long long& al,
                long long& be) const {
        const std::uint64_t nums = 2 * num_bound + 1;
        const std::uint64_t dens = 2 * den_bound;
        be = den_at(idx % dens);
        idx /= dens;
        al = static_cast<long long>(idx % nums) - num_bound;
        idx /= nums;
        b = den_at(idx % dens);
        idx /= dens;
        a = static_cast<long long>(idx) - num_bound;
    }

private:
    long long den_at(std::uint64_t i) const {
        long long v = static_cast<long long>(i) - den_bound;
        return v < 0 ? v : v + 1; // skip zero
    }
};

enum class ExecMode { Serial, Parallel };

/// Runs per_point over every grid point and folds the results into an Acc.
///
/// Acc must be default-constructible and provide merge_from(Acc&&); merges
/// happen in ascending index-range order, so an Acc that records hits in
/// visit order sees the same final state from the serial and parallel paths.
/// per_point(acc, idx, x, y) must touch nothing but its acc.
template <class Acc, class Fn>
Acc grid_scan(const GridSpec& grid, ExecMode mode, Fn&& per_point) {
    const auto total = static_cast<long long>(grid.total_points());
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const int threads = omp_get_max_threads();
        std::vector<Acc> partial(threads);
#pragma omp parallel num_threads(threads)
        {
            Acc& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
            // schedule(static): one contiguous index block per thread, assigned
            // in thread order, so the merge below is index-ordered
#pragma omp for schedule(static)
            for (long long i = 0; i < total; ++i) {
                long long a, b, al, be;
                grid.decode(static_cast<std::uint64_t>(i), a, b, al, be);
                per_point(local, static_cast<std::uint64_t>(i), make_rep(a, b),
                          make_rep(al, be));
            }
        }
        Acc out = std::move(partial[0]);
        for (int t = 1; t < threads; ++t)
            out.merge_from(std::move(partial[static_cast<std::size_t>(t)]));
        return out;
    }
#else
    (void)mode;
#endif
    Acc out;
    for (long long i = 0; i < total; ++i) {
        long long a, b, al, be;
        grid.decode(static_cast<std::uint64_t>(i), a, b, al, be);
        per_point(out, static_cast<std::uint64_t>(i), make_rep(a, b), make_rep(al, be));
    }
    return out;
}

} // namespace fracops
