#pragma once

#include "pgcover/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pgcover {

/// C(n,k), saturating at cap.
uint64_t binom_capped(long long n, long long k, uint64_t cap);

/// Combinations in co-lexicographic order over {0..n-1}: the subset
/// c_0 < c_1 < ... < c_{k-1} has rank sum_i C(c_i, i+1). Rank/unrank is
/// trivial, which makes deterministic chunking for parallel workers easy.
std::vector<int> colex_unrank(uint64_t rank, int k, int n);
uint64_t colex_rank(const std::vector<int>& c);
/// Advance to the colex successor; returns false after the last subset.
bool colex_next(std::vector<int>& c, int n);

/// Seeded uniform k-subset of {0..n-1}, sorted; sample s of a run is a
/// pure function of (seed, s), so results do not depend on thread count.
std::vector<int> sample_subset(uint64_t seed, uint64_t sample_index, int k, int n);

enum class CheckOutcome { NotQualifying, Ok, Violation };

struct ScanStats {
    uint64_t instances_checked = 0;
    uint64_t hypothesis_met = 0;
    std::vector<std::vector<int>> violations; // subsets, in scan order
};

/// Serial reference scan over all C(n,k) subsets. `factory()` builds one
/// checker; a checker is called once per subset and may keep scratch
/// buffers.
template <class CheckerFactory>
ScanStats scan_exhaustive_serial(int n, int k, CheckerFactory factory) {
    ScanStats stats;
    auto check = factory();
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        ++stats.instances_checked;
        switch (check(c)) {
            case CheckOutcome::NotQualifying: break;
            case CheckOutcome::Ok: ++stats.hypothesis_met; break;
            case CheckOutcome::Violation:
                ++stats.hypothesis_met;
                stats.violations.push_back(c);
                break;
        }
    } while (colex_next(c, n));
    return stats;
}

/// OpenMP scan: the colex rank range is split into contiguous chunks, one
/// checker per thread, partial results merged in chunk order. Produces
/// the identical ScanStats as the serial reference.
template <class CheckerFactory>
ScanStats scan_exhaustive_parallel(int n, int k, CheckerFactory factory, int threads) {
    uint64_t total = binom_capped(n, k, UINT64_MAX);
    if (threads < 1) threads = 1;
    std::vector<ScanStats> partial(threads);
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        int t = omp_get_thread_num();
        int nt = omp_get_num_threads();
#else
        int t = 0, nt = 1;
#endif
        uint64_t lo = total * t / nt;
        uint64_t hi = total * (t + 1) / nt;
        ScanStats& stats = partial[t];
        if (lo < hi) {
            auto check = factory();
            std::vector<int> c = colex_unrank(lo, k, n);
            for (uint64_t r = lo; r < hi; ++r) {
                ++stats.instances_checked;
                switch (check(c)) {
                    case CheckOutcome::NotQualifying: break;
                    case CheckOutcome::Ok: ++stats.hypothesis_met; break;
                    case CheckOutcome::Violation:
                        ++stats.hypothesis_met;
                        stats.violations.push_back(c);
                        break;
                }
                colex_next(c, n);
            }
        }
    }
    ScanStats merged;
    for (auto& s : partial) {
        merged.instances_checked += s.instances_checked;
        merged.hypothesis_met += s.hypothesis_met;
        for (auto& v : s.violations) merged.violations.push_back(std::move(v));
    }
    return merged;
}

template <class CheckerFactory>
ScanStats scan_sampled_serial(int n, int k, uint64_t samples, uint64_t seed,
                              CheckerFactory factory) {
    ScanStats stats;
    auto check = factory();
    for (uint64_t s = 0; s < samples; ++s) {
        std::vector<int> c = sample_subset(seed, s, k, n);
        ++stats.instances_checked;
        switch (check(c)) {
            case CheckOutcome::NotQualifying: break;
            case CheckOutcome::Ok: ++stats.hypothesis_met; break;
            case CheckOutcome::Violation:
                ++stats.hypothesis_met;
                stats.violations.push_back(std::move(c));
                break;
        }
    }
    return stats;
}

template <class CheckerFactory>
ScanStats scan_sampled_parallel(int n, int k, uint64_t samples, uint64_t seed,
                                CheckerFactory factory, int threads) {
    if (threads < 1) threads = 1;
    std::vector<ScanStats> partial(threads);
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        int t = omp_get_thread_num();
        int nt = omp_get_num_threads();
#else
        int t = 0, nt = 1;
#endif
        uint64_t lo = samples * t / nt;
        uint64_t hi = samples * (t + 1) / nt;
        ScanStats& stats = partial[t];
        if (lo < hi) {
            auto check = factory();
            for (uint64_t s = lo; s < hi; ++s) {
                std::vector<int> c = sample_subset(seed, s, k, n);
                ++stats.instances_checked;
                switch (check(c)) {
                    case CheckOutcome::NotQualifying: break;
                    case CheckOutcome::Ok: ++stats.hypothesis_met; break;
                    case CheckOutcome::Violation:
                        ++stats.hypothesis_met;
                        stats.violations.push_back(std::move(c));
                        break;
                }
            }
        }
    }
    ScanStats merged;
    for (auto& s : partial) {
        merged.instances_checked += s.instances_checked;
        merged.hypothesis_met += s.hypothesis_met;
        for (auto& v : s.violations) merged.violations.push_back(std::move(v));
    }
    return merged;
}

} // namespace pgcover
