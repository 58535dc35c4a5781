#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgcover/geometry.hpp"

#include <algorithm>
#include <stdexcept>

using namespace pgcover;

TEST_CASE("theta") {
    CHECK(theta(2, 5) == 31);
    CHECK(theta(1, 7) == 8);
    CHECK(theta(3, 2) == 15);
    CHECK(theta(3, 3) == 40);
    CHECK(theta(2, 17) == 307);
}

TEST_CASE("normalize") {
    Geometry g(2, FieldSpec::make(5, 1));
    CHECK(g.normalize({0, 2, 4}) == Vec{0, 1, 2});
    CHECK(g.normalize({1, 3, 0}) == Vec{1, 3, 0});
    CHECK_THROWS_AS(g.normalize({0, 0, 0}), std::invalid_argument);

    Geometry g4(2, FieldSpec::make(2, 2));
    CHECK(g4.normalize({2, 2, 0}) == Vec{1, 1, 0});
}

TEST_CASE("point enumeration is sorted and indexed") {
    Geometry g(2, FieldSpec::make(5, 1));
    CHECK(g.num_points() == 31);
    CHECK(g.coords(0) == Vec{0, 0, 1});
    for (int i = 1; i < g.num_points(); ++i)
        CHECK(g.coords(i - 1) < g.coords(i));
    for (int i = 0; i < g.num_points(); ++i)
        CHECK(g.index_of(g.coords(i)) == i);

    Geometry g33(3, FieldSpec::make(3, 1));
    CHECK(g33.num_points() == 40);
}

TEST_CASE("incidence") {
    Geometry g(2, FieldSpec::make(5, 1));
    int p100 = g.index_of({1, 0, 0});
    int h010 = g.index_of({0, 1, 0});
    int h100 = g.index_of({1, 0, 0});
    CHECK(g.incident(p100, h010));
    CHECK_FALSE(g.incident(p100, h100));
    // 1 + 2 + 12 = 15 = 0 mod 5
    CHECK(g.incident(g.index_of({1, 2, 3}), g.index_of({1, 1, 4})));
}

TEST_CASE("each point on theta_{n-1} hyperplanes, exhaustively") {
    for (auto [n, p, h] :
         std::vector<std::tuple<int, int, int>>{{2, 5, 1}, {3, 3, 1}, {2, 2, 2}}) {
        Geometry g(n, FieldSpec::make(p, h));
        long long expected = theta(n - 1, g.field().q());
        for (int i = 0; i < g.num_points(); ++i)
            CHECK(g.hyperplane_mask(i).count() == expected);
    }
}

TEST_CASE("duality symmetry of the incidence table") {
    Geometry g(2, FieldSpec::make(3, 1));
    for (int i = 0; i < g.num_points(); ++i)
        for (int j = 0; j < g.num_points(); ++j)
            CHECK(g.incident(i, j) == g.incident(j, i));
}

TEST_CASE("line_through") {
    Geometry g(2, FieldSpec::make(5, 1));
    auto line = g.line_through(g.index_of({1, 0, 0}), g.index_of({0, 1, 0}));
    CHECK(line.size() == 6);
    std::vector<Vec> coords;
    for (int i : line) coords.push_back(g.coords(i));
    CHECK(coords == std::vector<Vec>{{0, 1, 0},
                                     {1, 0, 0},
                                     {1, 1, 0},
                                     {1, 2, 0},
                                     {1, 3, 0},
                                     {1, 4, 0}});
    CHECK(g.line_through(line[0], line[1]) == line); // any two points span it
    CHECK_THROWS_AS(g.line_through(3, 3), std::invalid_argument);

    Geometry g32(3, FieldSpec::make(2, 1));
    CHECK(g32.line_through(g32.index_of({1, 0, 0, 0}), g32.index_of({0, 0, 0, 1}))
              .size() == 3);
}

TEST_CASE("rank, span, intersect") {
    Geometry g(2, FieldSpec::make(5, 1));
    CHECK(g.rank({{1, 0, 0}, {2, 0, 0}}) == 1);
    Subspace line = g.span_rows({{1, 0, 0}, {0, 1, 0}});
    CHECK(line.dim() == 1);

    Geometry g3(3, FieldSpec::make(3, 1));
    Subspace plane1{g3.kernel({{1, 0, 0, 0}})};
    Subspace plane2{g3.kernel({{0, 1, 0, 0}})};
    CHECK(plane1.dim() == 2);
    CHECK(g3.intersect(plane1, plane2).dim() == 1);
}

TEST_CASE("subspace membership and points") {
    Geometry g(2, FieldSpec::make(5, 1));
    Subspace line = g.span_rows({{1, 0, 0}, {0, 1, 0}});
    CHECK(g.in_subspace(line, g.index_of({1, 3, 0})));
    CHECK_FALSE(g.in_subspace(line, g.index_of({0, 0, 1})));
    CHECK(g.subspace_points(line).size() == 6);
}

TEST_CASE("subspaces_through") {
    Geometry g(2, FieldSpec::make(5, 1));
    Subspace pt = g.span_points({g.index_of({0, 0, 1})});
    CHECK(g.subspaces_through(pt, 1).size() == 6); // lines through a point

    Geometry g33(3, FieldSpec::make(3, 1));
    Subspace line = g33.span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(g33.subspaces_through(line, 2).size() == 4); // planes through a line
    CHECK(g33.hyperplanes_through(line).size() == 4);  // the pencil
    CHECK_THROWS_AS(g.subspaces_through(pt, 0), std::invalid_argument);
}

TEST_CASE("size cap is enforced") {
    // theta_24(2) = 2^25 - 1 > 2^24
    CHECK_THROWS_AS(Geometry(24, FieldSpec::make(2, 1)), std::invalid_argument);
}
