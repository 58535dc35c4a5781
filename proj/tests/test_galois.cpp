#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcover/galois.hpp"

#include <stdexcept>
#include <vector>

using namespace pgcover;

namespace {

// Independent GF(4) multiplication oracle: multiply coefficient vectors
// (c0 + c1 x) symbolically over GF(2) and eliminate x^2 via x^2 = x + 1.
int gf4_mul_oracle(int a, int b) {
    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
    c0 = (c0 + c2) & 1; // x^2 contributes 1
    c1 = (c1 + c2) & 1; // and x
    return c0 + 2 * c1;
}

} // namespace

TEST_CASE("prime field GF(5)") {
    FieldSpec f = FieldSpec::make(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.mul(3, 4) == 2);
    CHECK(f.inv(2) == 3);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.neg(1) == 4);
    CHECK(f.elements() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(2, 0), std::invalid_argument);
    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 0, 1}),
                    std::invalid_argument);
    // degree mismatch
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 1}),
                    std::invalid_argument);
    // not monic
    CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<int>{1, 0, 2}),
                    std::invalid_argument);
}

TEST_CASE("GF(4) default modulus is x^2+x+1") {
    FieldSpec f = FieldSpec::make(2, 2);
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    CHECK(f.q() == 4);
}

TEST_CASE("GF(4) multiplication matches the polynomial-reduction oracle") {
    FieldSpec f = FieldSpec::make(2, 2, std::vector<int>{1, 1, 1});
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(f.mul(a, b) == gf4_mul_oracle(a, b));
    CHECK(f.mul(2, 2) == 3); // x * x = x + 1
}

TEST_CASE("GF(9) has 9 elements, first two are 0 and 1") {
    FieldSpec f = FieldSpec::make(3, 2);
    auto e = f.elements();
    CHECK(e.size() == 9);
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (auto [p, h] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
             {13, 1}, {2, 4}}) {
        FieldSpec f = FieldSpec::make(p, h);
        int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1);
            }
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("encoding round trip") {
    FieldSpec f = FieldSpec::make(3, 2);
    for (int rep = 0; rep < f.q(); ++rep)
        CHECK(f.from_poly(f.to_poly(rep)) == rep);
}

TEST_CASE("inv(0) and out-of-range reps") {
    FieldSpec f = FieldSpec::make(7, 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.add(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(f.mul(-1, 2), std::invalid_argument);
}

TEST_CASE("negative exponent") {
    FieldSpec f = FieldSpec::make(5, 1);
    CHECK(f.pow(2, -1) == f.inv(2));
    CHECK(f.pow(3, -2) == f.inv(f.mul(3, 3)));
}
