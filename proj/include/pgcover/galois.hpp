#pragma once

#include <optional>
#include <vector>

namespace pgcover {

bool is_prime(long long v);

/// Polynomials over GF(p) are coefficient vectors c_0..c_d, low degree first.
namespace poly {
std::vector<int> trim(std::vector<int> a);
int degree(const std::vector<int>& a);
std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int p);
std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p);
bool irreducible(const std::vector<int>& a, int p);
} // namespace poly

/// Lexicographically smallest monic irreducible of degree h over GF(p),
/// coefficient tuples compared low-degree-first.
std::vector<int> default_irreducible(int p, int h);

/// Arithmetic context for GF(q), q = p^h. Elements are integer reps in
/// [0, q): the coefficient vector (c_0, ..., c_{h-1}) encoded in base p
/// with c_0 least significant. Immutable after construction; all
/// operations are pure.
class FieldSpec {
public:
    FieldSpec() = default; // empty placeholder; use make() for a real field
    static FieldSpec make(int p, int h,
                          std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int h() const { return h_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long k) const;

    /// reps 0..q-1 in order; element 0 first, element 1 second.
    std::vector<int> elements() const;

    std::vector<int> to_poly(int rep) const;
    int from_poly(const std::vector<int>& coeffs) const;

    bool operator==(const FieldSpec&) const = default;

private:
    void check_rep(int a) const;
    int p_ = 0, h_ = 0, q_ = 0;
    std::vector<int> modulus_; // c_0..c_h, monic degree h
};

} // namespace pgcover
