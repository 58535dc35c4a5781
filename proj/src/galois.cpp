#include "pgcover/galois.hpp"

#include <stdexcept>

namespace pgcover {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace poly {

std::vector<int> trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const std::vector<int>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (int)((c[i + j] + (long long)a[i] * b[j]) % p);
    return trim(c);
}

std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = degree(m);
    // leading coefficient of m must be invertible; callers pass monic m
    int lead = m[dm];
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    a = trim(a);
    while (degree(a) >= dm) {
        int da = degree(a);
        int factor = (int)((long long)a[da] * lead_inv % p);
        for (int i = 0; i <= dm; ++i) {
            long long v = a[da - dm + i] - (long long)factor * m[i] % p;
            a[da - dm + i] = (int)((v % p + p) % p);
        }
        a = trim(a);
    }
    return a;
}

bool irreducible(const std::vector<int>& a, int p) {
    int d = degree(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> div(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) { div[i] = (int)(c % p); c /= p; }
            div[dd] = 1;
            if (degree(mod(a, div, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace poly

std::vector<int> default_irreducible(int p, int h) {
    if (h == 1) return {0, 1};
    // odometer with c_0 as the most significant comparison digit
    std::vector<int> low(h, 0);
    for (;;) {
        std::vector<int> cand(low);
        cand.push_back(1);
        if (poly::irreducible(cand, p)) return cand;
        int i = h - 1;
        while (i >= 0 && low[i] == p - 1) low[i--] = 0;
        if (i < 0) break;
        ++low[i];
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

FieldSpec FieldSpec::make(int p, int h, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    FieldSpec s;
    s.p_ = p;
    s.h_ = h;
    long long q = 1;
    for (int i = 0; i < h; ++i) {
        q *= p;
        if (q > (1LL << 30)) throw std::invalid_argument("field too large");
    }
    s.q_ = (int)q;
    if (modulus) {
        std::vector<int> m = *modulus;
        if (poly::degree(m) != h)
            throw std::invalid_argument("modulus degree must equal h");
        for (int c : m)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (m[h] != 1) throw std::invalid_argument("modulus must be monic");
        if (h > 1 && !poly::irreducible(m, p))
            throw std::invalid_argument("modulus is reducible over GF(p)");
        m.resize(h + 1);
        s.modulus_ = m;
    } else {
        s.modulus_ = default_irreducible(p, h);
    }
    return s;
}

void FieldSpec::check_rep(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element rep out of range");
}

int FieldSpec::add(int a, int b) const {
    check_rep(a); check_rep(b);
    if (h_ == 1) return (a + b) % p_;
    int out = 0, mult = 1;
    while (a || b) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return out;
}

int FieldSpec::neg(int a) const {
    check_rep(a);
    if (h_ == 1) return (p_ - a) % p_;
    int out = 0, mult = 1;
    while (a) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_; mult *= p_;
    }
    return out;
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::mul(int a, int b) const {
    check_rep(a); check_rep(b);
    if (h_ == 1) return (int)((long long)a * b % p_);
    return from_poly(poly::mod(poly::mul(to_poly(a), to_poly(b), p_), modulus_, p_));
}

int FieldSpec::inv(int a) const {
    check_rep(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

int FieldSpec::pow(int a, long long k) const {
    check_rep(a);
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    int result = 1, base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<int> FieldSpec::elements() const {
    std::vector<int> e(q_);
    for (int i = 0; i < q_; ++i) e[i] = i;
    return e;
}

std::vector<int> FieldSpec::to_poly(int rep) const {
    std::vector<int> c(h_, 0);
    for (int i = 0; i < h_; ++i) { c[i] = rep % p_; rep /= p_; }
    return c;
}

int FieldSpec::from_poly(const std::vector<int>& coeffs) const {
    int rep = 0, mult = 1;
    for (int i = 0; i < h_; ++i) {
        int c = i < (int)coeffs.size() ? coeffs[i] : 0;
        rep += c * mult;
        mult *= p_;
    }
    return rep;
}

} // namespace pgcover
