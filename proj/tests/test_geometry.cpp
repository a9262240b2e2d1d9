#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "medax/geometry.hpp"

using namespace medax;

namespace {

// independent hull oracle: a point is a vertex iff some line through it
// keeps all other points strictly on one side
std::vector<Point2> brute_hull_vertices(const std::vector<Point2>& pts) {
    std::vector<Point2> verts;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        bool vertex = false;
        for (std::size_t b = 0; b < pts.size() && !vertex; ++b) {
            if (a == b) continue;
            bool all_right = true, any_on = false;
            for (std::size_t c = 0; c < pts.size(); ++c) {
                if (c == a || c == b) continue;
                const double s = cross(pts[b] - pts[a], pts[c] - pts[a]);
                if (s > 1e-12) all_right = false;
                if (std::abs(s) <= 1e-12) any_on = true;
            }
            if (all_right && !any_on) vertex = true;
        }
        if (vertex) verts.push_back(pts[a]);
    }
    return verts;
}

bool contains_point(const std::vector<Point2>& set, Point2 p) {
    for (const auto& q : set)
        if (std::abs(q.x - p.x) < 1e-12 && std::abs(q.y - p.y) < 1e-12) return true;
    return false;
}

}  // namespace

TEST_CASE("hull degenerate cases") {
    CHECK(convex_hull({{1.0, 2.0}}).size() == 1);

    auto seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
    CHECK(seg.size() == 2);

    auto square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(square.size() == 4);
    CHECK_FALSE(contains_point(square, {0.5, 0.5}));
}

TEST_CASE("hull matches the supporting-line oracle on random clouds") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point2> pts;
        for (int i = 0; i < 50; ++i) pts.push_back({u(rng), u(rng)});
        auto hull = convex_hull(pts);
        auto expect = brute_hull_vertices(pts);
        CHECK(hull.size() == expect.size());
        for (const auto& v : expect) CHECK(contains_point(hull, v));
        // counterclockwise orientation
        double area2 = 0.0;
        for (std::size_t i = 0; i < hull.size(); ++i)
            area2 += cross(hull[i], hull[(i + 1) % hull.size()]);
        CHECK(area2 > 0.0);
    }
}

TEST_CASE("distance to convex polygon") {
    std::vector<Point2> seg = {{-1.0, 0.0}, {1.0, 0.0}};
    CHECK(dist2_convex_polygon({0.0, 2.0}, seg) == doctest::Approx(4.0));

    auto tri = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(dist2_convex_polygon({0.5, 0.5}, tri) == doctest::Approx(0.0));

    // brute force: dense boundary sampling plus an independent ray-casting
    // inside test
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Point2> cloud;
        for (int i = 0; i < 12; ++i) cloud.push_back({u(rng), u(rng)});
        auto hull = convex_hull(cloud);
        REQUIRE(hull.size() >= 3);
        for (int q = 0; q < 20; ++q) {
            const Point2 p{2.5 * u(rng), 2.5 * u(rng)};
            double brute = std::numeric_limits<double>::infinity();
            int crossings = 0;
            for (std::size_t i = 0; i < hull.size(); ++i) {
                const Point2 a = hull[i], b = hull[(i + 1) % hull.size()];
                for (int t = 0; t <= 4000; ++t)
                    brute = std::min(brute, dist2_point(p, a + (t / 4000.0) * (b - a)));
                if ((a.y > p.y) != (b.y > p.y)) {
                    const double xc = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                    if (xc > p.x) ++crossings;
                }
            }
            if (crossings % 2 == 1) brute = 0.0;
            CHECK(std::abs(dist2_convex_polygon(p, hull) - brute) <= 1e-6);
        }
    }
}

TEST_CASE("medial descriptor distances") {
    MedialDescriptor mk;
    mk.lines.push_back({{0.0, 0.0}, {0.0, 1.0}});
    CHECK(mk.dist({0.3, 5.0}) == doctest::Approx(0.3));

    MedialDescriptor ray;
    ray.rays.push_back({{0.0, 0.0}, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}});
    CHECK(ray.dist({2.0, 0.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(ray.dist({-1.0, -1.0}) == doctest::Approx(std::sqrt(2.0)));

    MedialDescriptor seg;
    seg.segments.push_back({{-1.0, 0.0}, {1.0, 0.0}});
    CHECK(seg.dist({3.0, 4.0}) == doctest::Approx(std::sqrt(20.0)));
}
