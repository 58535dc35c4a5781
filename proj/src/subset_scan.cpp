#include "pgcover/subset_scan.hpp"

#include <algorithm>

namespace pgcover {

uint64_t binom_capped(long long n, long long k, uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (unsigned long long)(n - k + i) / (unsigned long long)i;
        if (r > cap) return cap;
    }
    return (uint64_t)r;
}

std::vector<int> colex_unrank(uint64_t rank, int k, int n) {
    std::vector<int> c(k);
    int hi = n;
    for (int i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        int v = i - 1;
        for (int cand = hi - 1; cand >= i - 1; --cand) {
            if (binom_capped(cand, i, UINT64_MAX) <= rank) { v = cand; break; }
        }
        c[i - 1] = v;
        rank -= binom_capped(v, i, UINT64_MAX);
        hi = v;
    }
    return c;
}

uint64_t colex_rank(const std::vector<int>& c) {
    uint64_t r = 0;
    for (size_t i = 0; i < c.size(); ++i)
        r += binom_capped(c[i], (long long)i + 1, UINT64_MAX);
    return r;
}

bool colex_next(std::vector<int>& c, int n) {
    int k = (int)c.size();
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

std::vector<int> sample_subset(uint64_t seed, uint64_t sample_index, int k, int n) {
    SplitMix64 rng = derived_stream(seed, sample_index + 1);
    // Floyd's algorithm for k distinct values in [0, n)
    std::vector<int> chosen;
    chosen.reserve(k);
    for (int j = n - k; j < n; ++j) {
        int t = (int)rng.below((uint64_t)j + 1);
        if (std::find(chosen.begin(), chosen.end(), t) != chosen.end())
            chosen.push_back(j);
        else
            chosen.push_back(t);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace pgcover
