#include "medax/geometry.hpp"

#include <algorithm>
#include <limits>

namespace medax {

double dist2_segment(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0) return dist2_point(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist2_point(p, a + t * ab);
}

std::vector<Point2> convex_hull(const std::vector<Point2>& pts) {
    std::vector<Point2> p(pts);
    std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    p.erase(std::unique(p.begin(), p.end(),
                        [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
            p.end());
    const size_t n = p.size();
    if (n <= 2) return p;

    // Andrew monotone chain; strict turns drop collinear interior points.
    std::vector<Point2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = p[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = p[i];
    }
    hull.resize(k - 1);
    if (hull.empty()) {
        // all points collinear: keep the two extremes as a segment
        hull = {p.front(), p.back()};
    }
    return hull;
}

double dist2_convex_polygon(Point2 p, const std::vector<Point2>& hull) {
    if (hull.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (hull.size() == 1) return dist2_point(p, hull[0]);
    if (hull.size() == 2) return dist2_segment(p, hull[0], hull[1]);

    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    const size_t n = hull.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2 a = hull[i];
        const Point2 b = hull[(i + 1) % n];
        if (cross(b - a, p - a) < 0.0) inside = false;
        best = std::min(best, dist2_segment(p, a, b));
    }
    return inside ? 0.0 : best;
}

double MedialDescriptor::dist(Point2 p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : points) best = std::min(best, dist2_point(p, q));
    for (const auto& s : segments) best = std::min(best, dist2_segment(p, s.first, s.second));
    for (const auto& r : rays) {
        const double t = std::max(0.0, dot(p - r.origin, r.dir));
        best = std::min(best, dist2_point(p, r.origin + t * r.dir));
    }
    for (const auto& l : lines) {
        const double t = dot(p - l.point, l.dir);
        best = std::min(best, dist2_point(p, l.point + t * l.dir));
    }
    return std::sqrt(best);
}

}  // namespace medax
