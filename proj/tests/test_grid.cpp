#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "medax/grid.hpp"

using namespace medax;

TEST_CASE("make_field fills and validates") {
    GridSpec spec{0.0, 0.0, 1.0, 3, 3};
    ScalarField2 f = make_field(spec, 0.0);
    CHECK(f.values.size() == 9);
    for (double v : f.values) CHECK(v == 0.0);

    ScalarField2 one = make_field(GridSpec{0, 0, 1.0, 1, 1}, 7.5);
    CHECK(one.values.size() == 1);
    CHECK(one.values[0] == 7.5);

    GridSpec bad{0.0, 0.0, 0.0, 3, 3};
    CHECK_THROWS_AS(make_field(bad, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(GridSpec{0, 0, 1.0, 0, 3}, 0.0), std::invalid_argument);
}

TEST_CASE("world coordinates and nearest index round-trip") {
    GridSpec spec{-1.0, 2.0, 0.5, 9, 5};
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            const Point2 p = spec.world(i, j);
            CHECK(spec.nearest_i(p.x) == i);
            CHECK(spec.nearest_j(p.y) == j);
        }
}

TEST_CASE("mask_to_points uses world coordinates and rejects empty masks") {
    GridSpec spec{0.0, 0.0, 0.5, 4, 4};
    BinaryMask2 mask(spec, false);
    mask.set(2, 1, true);
    PointSet2 pts = mask_to_points(mask);
    REQUIRE(pts.size() == 1);
    CHECK(pts.points[0].x == doctest::Approx(1.0));
    CHECK(pts.points[0].y == doctest::Approx(0.5));

    mask.set(0, 0, true);
    CHECK(mask_to_points(mask).size() == 2);

    BinaryMask2 empty(spec, false);
    CHECK_THROWS_AS(mask_to_points(empty), EmptySetError);
}

TEST_CASE("point sets deduplicate within 1e-12") {
    PointSet2 pts({{1.0, 2.0}, {1.0, 2.0 + 1e-13}, {3.0, 4.0}});
    CHECK(pts.size() == 2);
}

TEST_CASE("boundary_cells on simple masks") {
    GridSpec spec{0.0, 0.0, 1.0, 3, 3};
    BinaryMask2 full(spec, true);
    BinaryMask2 ring = boundary_cells(full);
    CHECK(ring.count() == 8);
    CHECK_FALSE(ring.get(1, 1));

    BinaryMask2 single(spec, false);
    single.set(1, 1, true);
    BinaryMask2 bd = boundary_cells(single);
    CHECK(bd.count() == 1);
    CHECK(bd.get(1, 1));

    BinaryMask2 none(spec, false);
    CHECK(boundary_cells(none).count() == 0);
}

TEST_CASE("boundary is a subset of the mask; points round-trip to the mask") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GridSpec spec{-1.0, -1.0, 0.25, 12, 10};
    for (int trial = 0; trial < 20; ++trial) {
        BinaryMask2 mask(spec, false);
        for (auto& b : mask.bits) b = u(rng) < 0.35 ? 1 : 0;
        if (!mask.any()) continue;

        BinaryMask2 bd = boundary_cells(mask);
        for (std::size_t i = 0; i < mask.bits.size(); ++i)
            if (bd.bits[i]) CHECK(mask.bits[i]);

        BinaryMask2 back = rasterize_points(mask_to_points(mask), spec);
        CHECK(back.bits == mask.bits);
    }
}
