#include "medax/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace medax {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double sq(double v) { return v * v; }

// Lower transform of the squared distance to the quarter-plane corner
// {u >= 0, v >= 0} wall pair, i.e. of min(u, v)^2 on the first quadrant.
// Shared by the Strip and the single-step Staircase.  The first two region
// conditions are resolved as u <=> v*lambda/(1+lambda) (see the seam tests);
// the printed strip form drops the factor of v in the first condition.
double corner_g(double u, double v, double lambda) {
    if (u >= 0.0 && v >= 0.0) {
        if (u * (1.0 + lambda) <= v * lambda) return u * u;
        if (v * (1.0 + lambda) <= u * lambda) return v * v;
        const double s = (u + v) * (1.0 + lambda) / (2.0 * lambda + 1.0);
        return lambda / (1.0 + lambda) * sq(s) - lambda * (sq(u - s) + sq(v - s));
    }
    if (u <= 0.0 && v >= 0.0) return u * u;
    if (u >= 0.0 && v <= 0.0) return v * v;
    return u * u + v * v;
}

// ---- two-point ----

double two_point_dist2(double a, Point2 p) {
    return sq(std::abs(p.x) - a) + p.y * p.y;
}

double two_point_lower(double a, double lambda, Point2 p) {
    if (std::abs(p.x) <= a / (1.0 + lambda))
        return lambda / (1.0 + lambda) * a * a - lambda * p.x * p.x + p.y * p.y;
    return two_point_dist2(a, p);
}

// ---- 1-D interval complement, y-constant ----

double interval_dist2(Point2 p) {
    const double ax = std::abs(p.x);
    return ax <= 1.0 ? sq(1.0 - ax) : 0.0;
}

double interval_lower(double lambda, Point2 p) {
    const double ax = std::abs(p.x);
    if (ax <= 1.0 / (lambda + 1.0)) return lambda / (lambda + 1.0) - lambda * p.x * p.x;
    return interval_dist2(p);
}

// ---- ball complement ----

double ball_dist2(double rho, Point2 p) {
    const double r = norm(p);
    return r <= rho ? sq(rho - r) : 0.0;
}

double ball_lower(double rho, double lambda, Point2 p) {
    if (norm(p) <= rho / (1.0 + lambda))
        return lambda / (1.0 + lambda) * rho * rho - lambda * norm2(p);
    return ball_dist2(rho, p);
}

// ---- four points ----

double four_point_dist2(double b, double c, Point2 p) {
    return sq(std::abs(p.x) - b) + sq(std::abs(p.y) - c);
}

double four_point_lower(double b, double c, double lambda, Point2 p) {
    const double bs = b / (1.0 + lambda);
    const double cs = c / (1.0 + lambda);
    const double ax = std::abs(p.x), ay = std::abs(p.y);
    double g;
    if (ax <= bs && ay <= cs)
        g = 0.0;
    else if (ax >= bs && ay <= cs)
        g = sq(ax - bs);
    else if (ax <= bs && ay >= cs)
        g = sq(ay - cs);
    else
        g = sq(ax - bs) + sq(ay - cs);
    return (1.0 + lambda) * g + lambda / (1.0 + lambda) * (b * b + c * c) -
           lambda * (p.x * p.x + p.y * p.y);
}

// ---- strip: boundary of (-r, inf) x (-r, r) ----

double strip_dist2(double r, Point2 p) {
    const double ax = std::abs(p.x), ay = std::abs(p.y);
    if (p.x >= 0.0) return sq(ay - r);
    if (p.x >= -r) return ay >= ax ? sq(ay - r) : sq(ax - r);
    if (ay <= r) return sq(ax - r);
    return sq(ax - r) + sq(ay - r);
}

double strip_lower(double r, double lambda, Point2 p) {
    const double x = p.x, y = p.y;
    const double seam = -r / (1.0 + lambda);
    if (x >= -r && x <= 0.0 && y >= -r && x + y <= seam) return corner_g(x + r, y + r, lambda);
    if (x >= -r && x <= 0.0 && y <= r && x - y <= seam) return corner_g(x + r, r - y, lambda);
    if (x <= 0.0 && x + y >= seam && x - y >= seam)
        return r * r * lambda / (1.0 + lambda) - lambda * (x * x + y * y);
    const double ay = std::abs(y);
    if (x >= 0.0 && ay <= r / (1.0 + lambda))
        return r * r * lambda / (1.0 + lambda) - lambda * y * y;
    if (x >= 0.0 && ay >= r / (1.0 + lambda)) return sq(ay - r);
    if (x >= -r && ay >= r) return sq(ay - r);
    if (x <= -r && ay <= r) return sq(std::abs(x) - r);
    if (x <= -r && ay >= r) return sq(std::abs(x) - r) + sq(ay - r);
    throw BranchGapError("strip: no branch covers the query point");
}

// ---- rectangle: boundary of (-3r/2, 3r/2) x (-r, r), strip mirrored ----

Point2 rectangle_to_strip(double r, Point2 p) {
    return p.x <= 0.0 ? Point2{p.x + r / 2.0, p.y} : Point2{-p.x + r / 2.0, p.y};
}

// ---- oval (stadium) ----

double oval_dist2(double r, Point2 p) {
    if (std::abs(p.x) <= r / 2.0) return sq(std::abs(p.y) - r);
    if (p.x <= -r / 2.0) return sq(std::hypot(p.x + r / 2.0, p.y) - r);
    return sq(std::hypot(p.x - r / 2.0, p.y) - r);
}

double oval_lower(double r, double lambda, Point2 p) {
    const double cap = r / (1.0 + lambda);
    if (p.x + r / 2.0 <= 0.0) {
        const double d = std::hypot(p.x + r / 2.0, p.y);
        if (d <= cap)
            return lambda * r * r / (1.0 + lambda) - lambda * (sq(p.x + r / 2.0) + p.y * p.y);
        return sq(d - r);
    }
    if (p.x - r / 2.0 >= 0.0) {
        const double d = std::hypot(p.x - r / 2.0, p.y);
        if (d <= cap)
            return lambda * r * r / (1.0 + lambda) - lambda * (sq(p.x - r / 2.0) + p.y * p.y);
        return sq(d - r);
    }
    const double ay = std::abs(p.y);
    if (ay <= cap) return lambda * r * r / (1.0 + lambda) - lambda * p.y * p.y;
    return sq(ay - r);
}

// ---- single-step staircase; the set is the complement of
//      K = {x >= 0, y >= 0} U {x + y >= c} ----

double staircase_dist2(double c, Point2 p) {
    const double x = p.x, y = p.y;
    if (x >= 0.0 && x <= c && y >= 0.0 && y <= c) return x <= y ? x * x : y * y;
    if (y >= c && y - x >= 0.0 && y - x <= c) return x * x + sq(y - c);
    if (x >= c && x - y >= 0.0 && x - y <= c) return sq(x - c) + y * y;
    if (x + y >= c && (y - x >= c || x - y >= c)) return 0.5 * sq(x + y - c);
    return 0.0;
}

double staircase_lower(double c, double lambda, Point2 p) {
    const double x = p.x, y = p.y;
    const bool in_square = x >= 0.0 && x <= c && y >= 0.0 && y <= c;
    const double diag_cap = (1.0 + 2.0 * lambda) * c / (1.0 + lambda);
    if (in_square) {
        if (x * (1.0 + lambda) <= y * lambda) return x * x;
        if (y * (1.0 + lambda) <= x * lambda) return y * y;
        if (x + y <= diag_cap) {
            const double s = (1.0 + lambda) * (x + y) / (1.0 + 2.0 * lambda);
            return lambda * (1.0 + lambda) * sq((x + y) / (1.0 + 2.0 * lambda)) -
                   lambda * sq(x - s) - lambda * sq(y - s);
        }
    }
    if (x + y >= c && (y - x >= c || x - y >= c)) return 0.5 * sq(x + y - c);
    if (y >= c && y - x >= c / (1.0 + lambda) && y - x <= c) return x * x + sq(y - c);
    if (x >= c && x - y >= c / (1.0 + lambda) && x - y <= c) return sq(x - c) + y * y;
    if (x + y >= diag_cap && std::abs(y - x) <= c / (1.0 + lambda))
        return 0.5 * (lambda * c * c / (1.0 + lambda) - lambda * sq(y - x) + sq(x + y - c));
    // The printed source lists x^2 + y^2 on {x <= 0, y <= 0}; that region
    // lies inside the set itself (dist2 = 0), so the value falls through
    // to 0 like every other covered point of the set.
    return 0.0;
}

Point2 staircase_shift(double c, bool periodic, Point2 p) {
    if (!periodic) return p;
    const double i = std::round((p.x - p.y) / (2.0 * c));
    return {p.x - i * c, p.y + i * c};
}

// ---- subset of a circle ----

double circle_subset_dist2(const std::vector<Point2>& pts, Point2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : pts) best = std::min(best, dist2_point(p, q));
    return best;
}

double circle_subset_lower(double r0, const std::vector<Point2>& pts, double lambda, Point2 p) {
    std::vector<Point2> scaled;
    scaled.reserve(pts.size());
    for (const auto& q : pts) scaled.push_back(1.0 / (1.0 + lambda) * q);
    const double hull_d2 = dist2_convex_polygon(p, convex_hull(scaled));
    return lambda * r0 * r0 / (1.0 + lambda) + (1.0 + lambda) * hull_d2 - lambda * norm2(p);
}

}  // namespace

OracleShape OracleShape::two_point(double alpha) {
    require(alpha > 0.0, "two_point: alpha must be > 0");
    return {Tag::TwoPoint, alpha, 0.0, false, {}};
}
OracleShape OracleShape::interval_complement() {
    return {Tag::IntervalComplement, 1.0, 0.0, false, {}};
}
OracleShape OracleShape::ball_complement(double rho) {
    require(rho > 0.0, "ball_complement: rho must be > 0");
    return {Tag::BallComplement, rho, 0.0, false, {}};
}
OracleShape OracleShape::four_point(double b, double eps) {
    require(b > 0.0, "four_point: b must be > 0");
    require(eps > 0.0 && eps < 1.0, "four_point: eps must be in (0, 1)");
    return {Tag::FourPoint, b, eps, false, {}};
}
OracleShape OracleShape::strip(double r) {
    require(r > 0.0, "strip: r must be > 0");
    return {Tag::Strip, r, 0.0, false, {}};
}
OracleShape OracleShape::rectangle(double r) {
    require(r > 0.0, "rectangle: r must be > 0");
    return {Tag::Rectangle, r, 0.0, false, {}};
}
OracleShape OracleShape::oval(double r) {
    require(r > 0.0, "oval: r must be > 0");
    return {Tag::Oval, r, 0.0, false, {}};
}
OracleShape OracleShape::staircase(double c, bool periodic) {
    require(c > 0.0, "staircase: c must be > 0");
    return {Tag::Staircase, c, 0.0, periodic, {}};
}
OracleShape OracleShape::circle_subset(double r0, std::vector<Point2> pts) {
    require(r0 > 0.0, "circle_subset: r0 must be > 0");
    require(!pts.empty(), "circle_subset: empty point list");
    for (const auto& p : pts)
        require(std::abs(norm(p) - r0) <= 1e-12, "circle_subset: point off the circle");
    OracleShape s{Tag::CircleSubset, r0, 0.0, false, std::move(pts)};
    return s;
}

const char* OracleShape::name() const {
    switch (tag) {
        case Tag::TwoPoint: return "two_point";
        case Tag::IntervalComplement: return "interval_complement";
        case Tag::BallComplement: return "ball_complement";
        case Tag::FourPoint: return "four_point";
        case Tag::Strip: return "strip";
        case Tag::Rectangle: return "rectangle";
        case Tag::Oval: return "oval";
        case Tag::Staircase: return "staircase";
        case Tag::CircleSubset: return "circle_subset";
    }
    return "?";
}

OracleValues oracle_eval(const OracleShape& shape, double lambda, Point2 x) {
    require(lambda > 0.0, "oracle_eval: lambda must be > 0");
    OracleValues v;
    switch (shape.tag) {
        case OracleShape::Tag::TwoPoint:
            v.dist2 = two_point_dist2(shape.param, x);
            v.lower = two_point_lower(shape.param, lambda, x);
            break;
        case OracleShape::Tag::IntervalComplement:
            v.dist2 = interval_dist2(x);
            v.lower = interval_lower(lambda, x);
            break;
        case OracleShape::Tag::BallComplement:
            v.dist2 = ball_dist2(shape.param, x);
            v.lower = ball_lower(shape.param, lambda, x);
            break;
        case OracleShape::Tag::FourPoint:
            v.dist2 = four_point_dist2(shape.param, shape.eps * shape.param, x);
            v.lower = four_point_lower(shape.param, shape.eps * shape.param, lambda, x);
            break;
        case OracleShape::Tag::Strip:
            v.dist2 = strip_dist2(shape.param, x);
            v.lower = strip_lower(shape.param, lambda, x);
            break;
        case OracleShape::Tag::Rectangle: {
            const Point2 q = rectangle_to_strip(shape.param, x);
            v.dist2 = strip_dist2(shape.param, q);
            v.lower = strip_lower(shape.param, lambda, q);
            break;
        }
        case OracleShape::Tag::Oval:
            v.dist2 = oval_dist2(shape.param, x);
            v.lower = oval_lower(shape.param, lambda, x);
            break;
        case OracleShape::Tag::Staircase: {
            const Point2 q = staircase_shift(shape.param, shape.periodic, x);
            if (std::abs(q.x - q.y) > shape.param * (1.0 + 1e-12))
                throw BranchGapError("staircase: shifted point outside the step band");
            v.dist2 = staircase_dist2(shape.param, q);
            v.lower = staircase_lower(shape.param, lambda, q);
            break;
        }
        case OracleShape::Tag::CircleSubset:
            v.dist2 = circle_subset_dist2(shape.pts, x);
            v.lower = circle_subset_lower(shape.param, shape.pts, lambda, x);
            break;
    }
    v.mam = (1.0 + lambda) * (v.dist2 - v.lower);
    if (v.mam < 0.0 && v.mam > -1e-9) v.mam = 0.0;
    return v;
}

double two_point_mam_direct(double alpha, double lambda, Point2 x) {
    const double xi = alpha / (1.0 + lambda);
    const double ax = std::abs(x.x);
    if (ax >= xi) return 0.0;
    return sq(1.0 + lambda) * sq(ax - xi);
}

double four_point_mam_direct(double b, double eps, double lambda, Point2 x) {
    const double c = eps * b;
    const double s = 1.0 / (1.0 + lambda);
    const std::vector<Point2> pts = {{b * s, c * s}, {b * s, -c * s}, {-b * s, c * s},
                                     {-b * s, -c * s}};
    double d2 = std::numeric_limits<double>::infinity();
    for (const auto& q : pts) d2 = std::min(d2, dist2_point(x, q));
    const double hull_d2 = dist2_convex_polygon(x, convex_hull(pts));
    return sq(1.0 + lambda) * (d2 - hull_d2);
}

MedialDescriptor oracle_mk(const OracleShape& shape) {
    MedialDescriptor mk;
    const double r = shape.param;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (shape.tag) {
        case OracleShape::Tag::TwoPoint:
        case OracleShape::Tag::IntervalComplement:
            mk.lines.push_back({{0.0, 0.0}, {0.0, 1.0}});
            return mk;
        case OracleShape::Tag::BallComplement:
            mk.points.push_back({0.0, 0.0});
            return mk;
        case OracleShape::Tag::FourPoint:
            mk.lines.push_back({{0.0, 0.0}, {0.0, 1.0}});
            mk.lines.push_back({{0.0, 0.0}, {1.0, 0.0}});
            return mk;
        case OracleShape::Tag::Strip:
            mk.segments.push_back({{-r, -r}, {0.0, 0.0}});
            mk.segments.push_back({{-r, r}, {0.0, 0.0}});
            mk.rays.push_back({{0.0, 0.0}, {1.0, 0.0}});
            return mk;
        case OracleShape::Tag::Rectangle:
            mk.segments.push_back({{-1.5 * r, -r}, {-0.5 * r, 0.0}});
            mk.segments.push_back({{-1.5 * r, r}, {-0.5 * r, 0.0}});
            mk.segments.push_back({{1.5 * r, -r}, {0.5 * r, 0.0}});
            mk.segments.push_back({{1.5 * r, r}, {0.5 * r, 0.0}});
            mk.segments.push_back({{-0.5 * r, 0.0}, {0.5 * r, 0.0}});
            return mk;
        case OracleShape::Tag::Oval:
            mk.segments.push_back({{-0.5 * r, 0.0}, {0.5 * r, 0.0}});
            return mk;
        case OracleShape::Tag::Staircase:
            if (shape.periodic)
                throw std::invalid_argument("oracle_mk: periodic staircase unsupported");
            mk.rays.push_back({{0.0, 0.0}, {inv_sqrt2, inv_sqrt2}});
            return mk;
        case OracleShape::Tag::CircleSubset:
            throw std::invalid_argument("oracle_mk: circle_subset unsupported");
    }
    throw std::invalid_argument("oracle_mk: unknown shape");
}

double oracle_minf(const OracleShape& shape, Point2 x) {
    switch (shape.tag) {
        case OracleShape::Tag::TwoPoint:
        case OracleShape::Tag::FourPoint:
        case OracleShape::Tag::CircleSubset: {
            PointSet2 k = oracle_point_set(shape);
            double d2 = std::numeric_limits<double>::infinity();
            for (const auto& p : k.points) d2 = std::min(d2, dist2_point(x, p));
            std::vector<Point2> near;
            const double dmin = std::sqrt(d2);
            for (const auto& p : k.points)
                if (norm(p - x) <= dmin * (1.0 + 1e-12)) near.push_back(p);
            if (near.size() < 2) return 0.0;
            return std::max(0.0, d2 - dist2_convex_polygon(x, convex_hull(near)));
        }
        case OracleShape::Tag::IntervalComplement:
            if (std::abs(x.x) <= 1e-12) return 1.0;
            return 0.0;
        case OracleShape::Tag::BallComplement:
            if (norm(x) <= 1e-12) return shape.param * shape.param;
            return 0.0;
        case OracleShape::Tag::Staircase: {
            const Point2 q = staircase_shift(shape.param, shape.periodic, x);
            if (std::abs(q.x - q.y) > 1e-12) return 0.0;
            const double t = q.x;
            const double c = shape.param;
            if (t <= 0.0) return 0.0;
            if (t <= c) return 0.5 * t * t;
            return 0.5 * c * c;
        }
        default:
            throw std::invalid_argument("oracle_minf: unsupported shape");
    }
}

ScalarField2 oracle_dist2_field(const OracleShape& shape, const GridSpec& spec) {
    spec.validate();
    ScalarField2 out(spec, 0.0);
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            const Point2 p = spec.world(i, j);
            switch (shape.tag) {
                case OracleShape::Tag::TwoPoint:
                    out.at(i, j) = two_point_dist2(shape.param, p);
                    break;
                case OracleShape::Tag::IntervalComplement:
                    out.at(i, j) = interval_dist2(p);
                    break;
                case OracleShape::Tag::BallComplement:
                    out.at(i, j) = ball_dist2(shape.param, p);
                    break;
                case OracleShape::Tag::FourPoint:
                    out.at(i, j) = four_point_dist2(shape.param, shape.eps * shape.param, p);
                    break;
                case OracleShape::Tag::Strip:
                    out.at(i, j) = strip_dist2(shape.param, p);
                    break;
                case OracleShape::Tag::Rectangle:
                    out.at(i, j) = strip_dist2(shape.param, rectangle_to_strip(shape.param, p));
                    break;
                case OracleShape::Tag::Oval:
                    out.at(i, j) = oval_dist2(shape.param, p);
                    break;
                case OracleShape::Tag::Staircase:
                    out.at(i, j) = staircase_dist2(
                        shape.param, staircase_shift(shape.param, shape.periodic, p));
                    break;
                case OracleShape::Tag::CircleSubset:
                    out.at(i, j) = circle_subset_dist2(shape.pts, p);
                    break;
            }
        }
    return out;
}

PointSet2 oracle_point_set(const OracleShape& shape) {
    switch (shape.tag) {
        case OracleShape::Tag::TwoPoint:
            return PointSet2({{-shape.param, 0.0}, {shape.param, 0.0}});
        case OracleShape::Tag::FourPoint: {
            const double b = shape.param, c = shape.eps * shape.param;
            return PointSet2({{b, c}, {b, -c}, {-b, c}, {-b, -c}});
        }
        case OracleShape::Tag::CircleSubset:
            return PointSet2(shape.pts);
        default:
            throw std::invalid_argument("oracle_point_set: shape is not a finite point set");
    }
}

std::vector<Point2> shape_boundary_polygon(const OracleShape& shape, double max_seg_len) {
    require(max_seg_len > 0.0, "shape_boundary_polygon: max_seg_len must be > 0");
    std::vector<Point2> poly;
    const double r = shape.param;
    auto emit_arc = [&](Point2 center, double radius, double a0, double a1) {
        const int n = std::max(2, static_cast<int>(std::ceil(radius * std::abs(a1 - a0) /
                                                             max_seg_len)));
        for (int i = 0; i < n; ++i) {
            const double a = a0 + (a1 - a0) * i / n;
            poly.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
        }
    };
    auto emit_edge = [&](Point2 a, Point2 b) {
        const double len = norm(b - a);
        const int n = std::max(1, static_cast<int>(std::ceil(len / max_seg_len)));
        for (int i = 0; i < n; ++i) poly.push_back(a + (static_cast<double>(i) / n) * (b - a));
    };
    switch (shape.tag) {
        case OracleShape::Tag::Rectangle: {
            const double w = 1.5 * r;
            emit_edge({-w, -r}, {w, -r});
            emit_edge({w, -r}, {w, r});
            emit_edge({w, r}, {-w, r});
            emit_edge({-w, r}, {-w, -r});
            return poly;
        }
        case OracleShape::Tag::Oval: {
            const double pi = std::acos(-1.0);
            emit_edge({-r / 2.0, -r}, {r / 2.0, -r});
            emit_arc({r / 2.0, 0.0}, r, -pi / 2.0, pi / 2.0);
            emit_edge({r / 2.0, r}, {-r / 2.0, r});
            emit_arc({-r / 2.0, 0.0}, r, pi / 2.0, 3.0 * pi / 2.0);
            return poly;
        }
        default:
            throw std::invalid_argument("shape_boundary_polygon: unsupported shape");
    }
}

}  // namespace medax
