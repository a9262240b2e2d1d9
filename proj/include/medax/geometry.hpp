#ifndef MEDAX_GEOMETRY_HPP
#define MEDAX_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace medax {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point2 a) { return std::sqrt(norm2(a)); }

inline double dist2_point(Point2 a, Point2 b) { return norm2(a - b); }

/// Squared distance from p to the closed segment [a, b].
double dist2_segment(Point2 p, Point2 a, Point2 b);

/// Convex hull of a point cloud, counterclockwise, collinear interior
/// vertices removed.  Degenerate inputs yield a single point or a segment
/// (two vertices).
std::vector<Point2> convex_hull(const std::vector<Point2>& pts);

/// Squared distance from p to the convex polygon `hull` (vertices CCW,
/// may degenerate to a segment or a point).  Zero when p lies inside.
double dist2_convex_polygon(Point2 p, const std::vector<Point2>& hull);

/// Exact analytic medial-axis descriptor: a union of points, segments,
/// rays and full lines supporting nearest-distance queries.
struct MedialDescriptor {
    struct Ray {
        Point2 origin;
        Point2 dir;  // unit length
    };
    struct Line {
        Point2 point;
        Point2 dir;  // unit length
    };
    std::vector<Point2> points;
    std::vector<std::pair<Point2, Point2>> segments;
    std::vector<Ray> rays;
    std::vector<Line> lines;

    bool empty() const {
        return points.empty() && segments.empty() && rays.empty() && lines.empty();
    }
    double dist(Point2 p) const;
};

}  // namespace medax

#endif
