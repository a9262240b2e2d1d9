#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "medax/edt.hpp"

using namespace medax;

namespace {

ScalarField2 brute_edt_mask(const BinaryMask2& mask) {
    ScalarField2 out(mask.spec, 0.0);
    for (int j = 0; j < mask.spec.ny; ++j)
        for (int i = 0; i < mask.spec.nx; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int jj = 0; jj < mask.spec.ny; ++jj)
                for (int ii = 0; ii < mask.spec.nx; ++ii)
                    if (mask.get(ii, jj))
                        best = std::min(best, dist2_point(mask.spec.world(i, j),
                                                          mask.spec.world(ii, jj)));
            out.at(i, j) = best;
        }
    return out;
}

ScalarField2 brute_erode(const ScalarField2& f, double lambda) {
    ScalarField2 out(f.spec, 0.0);
    for (int j = 0; j < f.spec.ny; ++j)
        for (int i = 0; i < f.spec.nx; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int jj = 0; jj < f.spec.ny; ++jj)
                for (int ii = 0; ii < f.spec.nx; ++ii)
                    best = std::min(best, f.at(ii, jj) +
                                              lambda * dist2_point(f.spec.world(i, j),
                                                                   f.spec.world(ii, jj)));
            out.at(i, j) = best;
        }
    return out;
}

ScalarField2 random_field(std::mt19937_64& rng, const GridSpec& spec, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    ScalarField2 f(spec, 0.0);
    for (auto& v : f.values) v = u(rng);
    return f;
}

}  // namespace

TEST_CASE("edt_points simple values") {
    GridSpec spec{0.0, 0.0, 1.0, 5, 5};
    PointSet2 k({{0.0, 0.0}});
    ScalarField2 d = edt_points(k, spec);
    CHECK(d.at(3, 4) == doctest::Approx(25.0));
    CHECK(d.at(4, 4) == doctest::Approx(32.0));

    GridSpec spec2{-2.0, 0.0, 1.0, 5, 5};
    PointSet2 two({{-1.0, 0.0}, {1.0, 0.0}});
    ScalarField2 d2 = edt_points(two, spec2);
    CHECK(d2.at(spec2.nearest_i(0.0), spec2.nearest_j(2.0)) == doctest::Approx(5.0));

    CHECK_THROWS_AS(edt_points(PointSet2{}, spec), EmptySetError);
}

TEST_CASE("edt_points equals exhaustive search for 17 random points") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < 17; ++i) pts.push_back({u(rng), u(rng)});
    PointSet2 k(pts);
    GridSpec spec{0.0, 0.0, 1.0 / 63.0, 64, 64};
    ScalarField2 d = edt_points(k, spec);
    for (int j = 0; j < 64; ++j)
        for (int i = 0; i < 64; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : k.points) best = std::min(best, dist2_point(spec.world(i, j), p));
            CHECK(d.at(i, j) == best);  // exact, brute force per sample
        }
}

TEST_CASE("edt_mask examples and brute-force oracle") {
    GridSpec spec{0.0, 0.0, 1.0, 8, 8};
    BinaryMask2 single(spec, false);
    single.set(1, 2, true);
    ScalarField2 d = edt_mask(single);
    CHECK(d.at(3, 5) == doctest::Approx(13.0));  // offsets (2, 3)

    BinaryMask2 full(spec, true);
    ScalarField2 zero = edt_mask(full);
    CHECK(zero.max_value() == 0.0);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GridSpec rspec{-1.0, 0.5, 0.25, 32, 32};
    for (int trial = 0; trial < 3; ++trial) {
        BinaryMask2 mask(rspec, false);
        for (auto& b : mask.bits) b = u(rng) < 0.1 ? 1 : 0;
        if (!mask.any()) mask.set(0, 0, true);
        ScalarField2 fast = edt_mask(mask);
        ScalarField2 slow = brute_edt_mask(mask);
        for (std::size_t i = 0; i < fast.values.size(); ++i)
            CHECK(std::abs(fast.values[i] - slow.values[i]) <= 1e-9);
    }

    CHECK_THROWS_AS(edt_mask(BinaryMask2(spec, false)), EmptySetError);
}

TEST_CASE("edt_mask agrees with edt_points on cell centers") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GridSpec spec{0.0, 0.0, 0.5, 20, 16};
    BinaryMask2 mask(spec, false);
    for (auto& b : mask.bits) b = u(rng) < 0.08 ? 1 : 0;
    if (!mask.any()) mask.set(3, 3, true);
    ScalarField2 a = edt_mask(mask);
    ScalarField2 b = edt_points(mask_to_points(mask), spec);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-9);
}

TEST_CASE("quad erode/dilate against the O(N^2) oracle") {
    std::mt19937_64 rng(21);
    GridSpec spec{-1.0, -1.0, 2.0 / 15.0, 16, 16};
    for (double lambda : {2.0}) {
        ScalarField2 f = random_field(rng, spec, -1.0, 3.0);
        ScalarField2 er = quad_erode(f, lambda);
        ScalarField2 slow = brute_erode(f, lambda);
        for (std::size_t i = 0; i < er.values.size(); ++i)
            CHECK(std::abs(er.values[i] - slow.values[i]) <= 1e-9);

        ScalarField2 g = random_field(rng, spec, -1.0, 3.0);
        ScalarField2 di = quad_dilate(g, lambda);
        ScalarField2 neg = g;
        for (auto& v : neg.values) v = -v;
        ScalarField2 slow_d = brute_erode(neg, lambda);
        for (std::size_t i = 0; i < di.values.size(); ++i)
            CHECK(std::abs(di.values[i] + slow_d.values[i]) <= 1e-9);
    }
}

TEST_CASE("erosion and dilation envelope properties") {
    std::mt19937_64 rng(33);
    GridSpec spec{0.0, 0.0, 0.1, 24, 18};

    ScalarField2 c(spec, 4.25);
    CHECK(quad_erode(c, 1.5).max_value() == doctest::Approx(4.25));
    CHECK(quad_erode(c, 1.5).min_value() == doctest::Approx(4.25));
    CHECK(quad_dilate(c, 1.5).max_value() == doctest::Approx(4.25));

    ScalarField2 f = random_field(rng, spec, 0.0, 2.0);
    ScalarField2 er = quad_erode(f, 0.7);
    ScalarField2 op = quad_dilate(er, 0.7);
    const double fmin = f.min_value();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        CHECK(er.values[i] <= f.values[i] + 1e-12);
        CHECK(er.values[i] >= fmin - 1e-12);
        CHECK(op.values[i] <= f.values[i] + 1e-12);    // opening is anti-extensive
        CHECK(op.values[i] >= er.values[i] - 1e-12);
        CHECK(quad_dilate(f, 0.7).values[i] >= f.values[i] - 1e-12);
    }

    // monotone in lambda, ordered in f
    ScalarField2 e_small = quad_erode(f, 0.5);
    ScalarField2 e_big = quad_erode(f, 2.5);
    ScalarField2 g = f;
    for (auto& v : g.values) v += 0.3;
    ScalarField2 e_g = quad_erode(g, 0.5);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        CHECK(e_small.values[i] <= e_big.values[i] + 1e-12);
        CHECK(e_small.values[i] <= e_g.values[i] + 1e-12);
    }
}

TEST_CASE("translation invariance on the grid") {
    std::mt19937_64 rng(55);
    GridSpec spec{0.0, 0.0, 0.2, 30, 30};
    ScalarField2 f = random_field(rng, spec, 0.0, 1.0);
    // localize so a 4-cell shift does not interact with the border
    for (int j = 0; j < 30; ++j)
        for (int i = 0; i < 30; ++i)
            if (i < 8 || i >= 18 || j < 8 || j >= 18) f.at(i, j) = 2.0;

    ScalarField2 shifted(spec, 2.0);
    const int k = 4;
    for (int j = 0; j < 30 - k; ++j)
        for (int i = 0; i < 30 - k; ++i) shifted.at(i + k, j + k) = f.at(i, j);

    ScalarField2 a = quad_erode(f, 1.0);
    ScalarField2 b = quad_erode(shifted, 1.0);
    for (int j = 10; j < 16; ++j)
        for (int i = 10; i < 16; ++i)
            CHECK(a.at(i, j) == doctest::Approx(b.at(i + k, j + k)).epsilon(1e-12));
}

TEST_CASE("lambda validation and the degenerate erode") {
    GridSpec spec{0.0, 0.0, 1.0, 4, 4};
    ScalarField2 f(spec, 1.0);
    f.at(2, 2) = -3.0;
    CHECK_THROWS_AS(quad_erode(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quad_erode(f, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(quad_dilate(f, 0.0), std::invalid_argument);

    QuadTransformKind degenerate{QuadTransformKind::Op::Erode, 0.0};
    ScalarField2 inf = quad_transform(f, degenerate);
    CHECK(inf.max_value() == doctest::Approx(-3.0));
    CHECK_THROWS_AS(quad_transform(f, {QuadTransformKind::Op::Dilate, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("threaded passes match single-threaded exactly") {
    std::mt19937_64 rng(77);
    GridSpec spec{0.0, 0.0, 0.05, 101, 67};
    ScalarField2 f = random_field(rng, spec, -2.0, 2.0);
    ScalarField2 a = quad_erode(f, 1.3, 1);
    ScalarField2 b = quad_erode(f, 1.3, 4);
    CHECK(a.values == b.values);
}

TEST_CASE("suspect cells stay near the border for a centered set") {
    GridSpec spec{-2.0, -2.0, 0.05, 81, 81};
    ScalarField2 f(spec, 0.0);
    for (int j = 0; j < 81; ++j)
        for (int i = 0; i < 81; ++i) {
            const Point2 p = spec.world(i, j);
            f.at(i, j) = std::min(dist2_point(p, {-0.5, 0.0}), dist2_point(p, {0.5, 0.0}));
        }
    TransformDiag diag = quad_open_diag(f, 2.0);
    CHECK(diag.border_margin > 0);
    CHECK(diag.border_margin < 30);
    CHECK_FALSE(diag.suspect.get(40, 40));
}
