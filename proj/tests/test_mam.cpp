#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "medax/medial_axis_map.hpp"
#include "medax/oracles.hpp"

using namespace medax;

TEST_CASE("two-point map heights and support") {
    const double h = 1e-3;
    GridSpec spec{-3.0, -0.02, h, 6001, 41};
    MamParams p;
    p.lambda = 1.0;
    MamResult r = mam_field(oracle_point_set(OracleShape::two_point(1.0)), spec, p);

    // constant along the branch
    CHECK(std::abs(r.m_field.at_nearest({0.0, 0.0}) - 1.0) <= 5e-3);
    CHECK(std::abs(r.m_field.at_nearest({0.0, 0.015}) - 1.0) <= 5e-3);
    // zero beyond the transition
    CHECK(std::abs(r.m_field.at_nearest({0.6, 0.003})) <= 5e-3);
    // result identity on trusted cells
    for (int i = 2000; i < 4000; i += 137) {
        if (!r.trusted.get(i, 20)) continue;
        const double expect = (1.0 + p.lambda) * (r.dist2.at(i, 20) - r.lower.at(i, 20));
        CHECK(r.m_field.at(i, 20) == doctest::Approx(std::max(0.0, expect)).epsilon(1e-12));
        CHECK(r.m_field.at(i, 20) <= (1.0 + p.lambda) * r.dist2.at(i, 20) + 1e-9);
    }
}

TEST_CASE("two-point map at an off-axis branch sample (lambda = 1)") {
    // thin vertical strip around x = 0, tall enough to reach y = 0.7
    const double h = 1e-3;
    GridSpec spec{-0.8, -0.1, h, 1601, 1001};
    MamParams p;
    p.lambda = 1.0;
    MamResult r = mam_field(oracle_point_set(OracleShape::two_point(1.0)), spec, p);
    CHECK(r.trusted.get(spec.nearest_i(0.0), spec.nearest_j(0.7)));
    CHECK(std::abs(r.m_field.at_nearest({0.0, 0.7}) - 1.0) <= 5e-3);
}

TEST_CASE("four-point map heights at the specified samples") {
    const double h = 5e-3;
    GridSpec spec{-3.0, -3.0, h, 1201, 1201};
    MamParams p;
    p.lambda = 4.0;
    MamResult r = mam_field(oracle_point_set(OracleShape::four_point(2.0, 0.5)), spec, p);
    CHECK(std::abs(r.m_field.at_nearest({0.0, 1.0}) - 4.0) <= 2e-2);
    CHECK(std::abs(r.m_field.at_nearest({1.0, 0.0}) - 1.0) <= 2e-2);
    CHECK(std::abs(r.m_field.at_nearest({0.0, 0.0}) - 5.0) <= 2e-2);
}

TEST_CASE("singleton set gives an identically zero map") {
    GridSpec spec{-2.0, -2.0, 0.05, 81, 81};
    MamParams p;
    p.lambda = 2.0;
    MamResult r = mam_field(PointSet2({{0.3, -0.2}}), spec, p);
    CHECK(r.m_field.max_value() <= 1e-9);
}

TEST_CASE("empty sets and bad parameters are rejected") {
    GridSpec spec{0.0, 0.0, 1.0, 4, 4};
    MamParams p;
    CHECK_THROWS_AS(mam_field(PointSet2{}, spec, p), EmptySetError);
    MamParams bad;
    bad.lambda = 0.0;
    CHECK_THROWS_AS(mam_field(PointSet2({{0, 0}}), spec, bad), std::invalid_argument);
    MamParams bad_tol;
    bad_tol.nearest_tol = 0.5;
    CHECK_THROWS_AS(mam_field(PointSet2({{0, 0}}), spec, bad_tol), std::invalid_argument);
}

TEST_CASE("boundary and complement maps agree inside the mask") {
    GridSpec spec{-1.0, -1.0, 0.0125, 161, 161};
    BinaryMask2 disc(spec, false);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i)
            if (norm(spec.world(i, j)) < 0.8) disc.set(i, j, true);
    MamParams p;
    p.lambda = 5.0;
    BoundaryEquivalenceReport rep = mam_from_mask_boundary_equivalence(disc, p);
    CHECK(rep.pass);
    CHECK(rep.cells_checked > 1000);
    CHECK(rep.discrepancy <= rep.bound);

    BinaryMask2 rect(spec, false);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            const Point2 q = spec.world(i, j);
            if (std::abs(q.x) < 0.9 && std::abs(q.y) < 0.5) rect.set(i, j, true);
        }
    CHECK(mam_from_mask_boundary_equivalence(rect, p).pass);

    BinaryMask2 one(spec, false);
    one.set(80, 80, true);
    CHECK_THROWS_AS(mam_from_mask_boundary_equivalence(one, p), std::invalid_argument);
}

TEST_CASE("linear map is the pointwise square root") {
    GridSpec spec{0.0, 0.0, 1.0, 2, 2};
    ScalarField2 m(spec, 0.0);
    m.at(0, 0) = 4.0;
    m.at(1, 0) = 0.0;
    m.at(0, 1) = 2.25;
    m.at(1, 1) = -5e-10;  // round-off clamp
    ScalarField2 lin = linear_mam(m);
    CHECK(lin.at(0, 0) == doctest::Approx(2.0));
    CHECK(lin.at(1, 0) == 0.0);
    CHECK(lin.at(0, 1) == doctest::Approx(1.5));
    CHECK(lin.at(1, 1) == 0.0);

    m.at(1, 1) = -1.0;
    CHECK_THROWS_AS(linear_mam(m), std::invalid_argument);
}

TEST_CASE("linear map height on the two-point branch") {
    const double h = 1e-3;
    GridSpec spec{-3.0, -0.02, h, 6001, 41};
    MamParams p;
    p.lambda = 1.0;
    MamResult r = mam_field(oracle_point_set(OracleShape::two_point(1.0)), spec, p);
    ScalarField2 lin = linear_mam(r.m_field);
    const double d = std::sqrt(r.dist2.at_nearest({0.0, 0.0}));
    const double v = lin.at_nearest({0.0, 0.0});
    CHECK(v <= d + 5e-3);
    CHECK(v >= std::sin(std::acos(-1.0) / 2.0) * d - 5e-3);  // theta = pi at the midpoint
}

TEST_CASE("nearest set membership") {
    PointSet2 two = oracle_point_set(OracleShape::two_point(1.0));
    CHECK(nearest_set(two, {0.0, 0.0}, 0.0).size() == 2);
    CHECK(nearest_set(two, {0.5, 0.0}, 0.0).size() == 1);
    CHECK(nearest_set(two, {0.5, 0.0}, 0.0).points[0].x == doctest::Approx(1.0));

    PointSet2 four = oracle_point_set(OracleShape::four_point(2.0, 0.5));
    CHECK(nearest_set(four, {0.0, 0.0}, 0.0).size() == 4);
}

TEST_CASE("landscape map values") {
    PointSet2 two = oracle_point_set(OracleShape::two_point(1.0));
    CHECK(landscape_map(two, {0.0, 0.0}, 1e-9) == doctest::Approx(1.0));
    CHECK(landscape_map(two, {0.0, 0.7}, 1e-9) == doctest::Approx(1.0));
    CHECK(landscape_map(two, {0.3, 0.1}, 1e-9) == doctest::Approx(0.0));

    PointSet2 four = oracle_point_set(OracleShape::four_point(2.0, 0.5));
    CHECK(landscape_map(four, {0.0, 0.0}, 1e-9) == doctest::Approx(5.0));
}

TEST_CASE("separation angle by brute force over nearest pairs") {
    PointSet2 two = oracle_point_set(OracleShape::two_point(1.0));
    CHECK(separation_angle(two, {0.0, 0.0}, 1e-9) == doctest::Approx(std::acos(-1.0)));
    CHECK(separation_angle(two, {0.5, 0.0}, 1e-9) == 0.0);
    CHECK_THROWS_AS(separation_angle(two, {1.0, 0.0}, 1e-9), std::invalid_argument);

    // all four points are nearest at the origin; the maximal pair is
    // antipodal, so the brute-force maximum over the six pairs is pi
    PointSet2 four = oracle_point_set(OracleShape::four_point(2.0, 0.5));
    CHECK(separation_angle(four, {0.0, 0.0}, 1e-9) == doctest::Approx(std::acos(-1.0)));
    // off-center equidistant pair from one side only
    CHECK(separation_angle(four, {0.0, 0.3}, 1e-9) ==
          doctest::Approx(std::acos((-4.0 + 0.49) / (4.0 + 0.49))));
}

TEST_CASE("angle bound check at equidistant samples") {
    GridSpec spec{-3.0, -3.0, 0.01, 601, 601};
    PointSet2 two = oracle_point_set(OracleShape::two_point(1.0));
    AngleBoundReport rep = angle_bound_check(two, {0.0, 0.0}, 1.0, spec);
    CHECK(rep.pass);
    CHECK(rep.theta == doctest::Approx(std::acos(-1.0)));
    CHECK(rep.lower_bound == doctest::Approx(rep.upper_bound));  // sin(pi/2) = 1

    PointSet2 four = oracle_point_set(OracleShape::four_point(2.0, 0.5));
    AngleBoundReport rep4 = angle_bound_check(four, {0.0, 0.0}, 4.0, spec);
    CHECK(rep4.pass);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.3, 1.4);
    for (int trial = 0; trial < 3; ++trial) {
        // три points on a circle around a random center: the center is
        // equidistant to all of them
        const Point2 c{u(rng) - 0.8, u(rng) - 0.8};
        const double rad = u(rng);
        std::vector<Point2> pts;
        for (int i = 0; i < 3; ++i) {
            const double a = u(rng) + 2.1 * i;
            pts.push_back({c.x + rad * std::cos(a), c.y + rad * std::sin(a)});
        }
        AngleBoundReport rr = angle_bound_check(PointSet2(pts), c, 2.0, spec, 1e-9);
        CHECK(rr.pass);
    }
}

TEST_CASE("suplevel masks and antitone thresholds") {
    GridSpec spec{0.0, 0.0, 1.0, 3, 3};
    ScalarField2 m(spec, 0.0);
    for (int k = 0; k < 9; ++k) m.values[k] = k;
    CHECK(suplevel_mask(m, 0.0).count() == 9);
    CHECK(suplevel_mask(m, 100.0).count() == 0);
    BinaryMask2 a = suplevel_mask(m, 3.0);
    BinaryMask2 b = suplevel_mask(m, 6.0);
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        if (b.bits[i]) CHECK(a.bits[i]);
}

TEST_CASE("asymptotic hull distance limit identity") {
    const double h = 2e-3;
    GridSpec spec{-2.0, -1.0, h, 2001, 1001};
    const double lambda = 4.0;
    MamParams p;
    p.lambda = lambda;
    MamResult r = mam_field(oracle_point_set(OracleShape::two_point(1.0)), spec, p);
    ScalarField2 a = asymptotic_hull_distance(r.dist2, r.lower, lambda);

    // on the branch the hull of the nearest set contains the point
    CHECK(std::abs(a.at_nearest({0.0, 0.0}))
          <= 5.0 * h * (1.0 + lambda));
    // off the midline at (0, y) the value approaches |y|^2
    CHECK(std::abs(a.at_nearest({0.0, 0.5}) - 0.25) <= 5.0 * h * (1.0 + lambda));
    // far field: singleton nearest set, value near dist^2
    const double far = a.at_nearest({0.4, 0.1});
    const double expect = r.dist2.at_nearest({0.4, 0.1});
    CHECK(std::abs(far - expect) <= 5.0 * h * (1.0 + lambda));

    GridSpec other{0.0, 0.0, 1.0, 4, 4};
    ScalarField2 wrong(other, 0.0);
    CHECK_THROWS_AS(asymptotic_hull_distance(r.dist2, wrong, lambda), std::invalid_argument);
}

TEST_CASE("limit probe errors shrink toward the landscape map") {
    GridSpec spec{-2.5, -2.5, 5e-3, 1001, 1001};
    PointSet2 two = oracle_point_set(OracleShape::two_point(1.0));

    // on the branch every lambda is exact
    auto on_branch = limit_convergence_probe(two, {0.0, 0.7}, {1.0, 4.0, 16.0}, spec);
    for (const auto& [lam, err] : on_branch) CHECK(err <= 5e-3 * 5.0 * (1.0 + lam));

    // random sets: errors nonincreasing within tolerance
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    const std::vector<double> lambdas = {4.0, 16.0, 64.0};
    const double tol = 5.0 * spec.spacing * (1.0 + lambdas.back());
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<Point2> pts;
        for (int i = 0; i < 5; ++i) pts.push_back({u(rng), u(rng)});
        PointSet2 k(pts);
        const Point2 x{u(rng), u(rng)};
        auto probe = limit_convergence_probe(k, x, lambdas, spec);
        for (std::size_t i = 1; i < probe.size(); ++i)
            CHECK(probe[i].second <= probe[i - 1].second + tol);
    }
}

TEST_CASE("support containment for the two-point set") {
    GridSpec spec{-3.0, -3.0, 0.01, 601, 601};
    MamParams p;
    p.lambda = 1.0;
    MamResult r = mam_field(oracle_point_set(OracleShape::two_point(1.0)), spec, p);
    SupportReport rep =
        support_containment_check(r, oracle_mk(OracleShape::two_point(1.0)), p.lambda);
    CHECK(rep.pass);
    CHECK(rep.support_cells > 0);
}
