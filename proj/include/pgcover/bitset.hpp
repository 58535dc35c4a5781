#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pgcover {

/// Fixed-width dynamic bit set, one bit per point index of a PG(n,q).
/// The incidence kernels reduce hole computation to word-parallel OR /
/// AND-NOT over these masks.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(long long nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    long long size() const { return nbits_; }

    void set(long long i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(long long i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(long long i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { for (auto& w : words_) w = 0; }

    DynBitset& operator|=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    long long count() const {
        long long c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    bool intersects(const DynBitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    static long long and_count(const DynBitset& a, const DynBitset& b) {
        long long c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    /// Indices of zero bits, i.e. the holes of an OR-accumulated cover mask.
    std::vector<int> zero_indices() const {
        std::vector<int> out;
        for (long long w = 0; w < (long long)words_.size(); ++w) {
            uint64_t inv = ~words_[w];
            while (inv) {
                long long i = (w << 6) + std::countr_zero(inv);
                if (i >= nbits_) break;
                out.push_back((int)i);
                inv &= inv - 1;
            }
        }
        return out;
    }

    std::vector<int> one_indices() const {
        std::vector<int> out;
        for (long long w = 0; w < (long long)words_.size(); ++w) {
            uint64_t v = words_[w];
            while (v) {
                out.push_back((int)((w << 6) + std::countr_zero(v)));
                v &= v - 1;
            }
        }
        return out;
    }

    bool operator==(const DynBitset&) const = default;

private:
    long long nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pgcover
