#ifndef MEDAX_ORACLES_HPP
#define MEDAX_ORACLES_HPP

#include <vector>

#include "medax/geometry.hpp"
#include "medax/grid.hpp"

namespace medax {

/// Query outside the region any closed-form branch covers.
struct BranchGapError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Analytic test shapes with exactly known squared distance, lower
/// transform and medial-axis map.
struct OracleShape {
    enum class Tag {
        TwoPoint,           // {(-a, 0), (a, 0)}
        IntervalComplement, // 1-D set R \ (-1, 1), sampled y-constant
        BallComplement,     // complement of the open ball of radius rho
        FourPoint,          // {(+-b, +-eps*b)}
        Strip,              // boundary of (-r, inf) x (-r, r)
        Rectangle,          // boundary of (-3r/2, 3r/2) x (-r, r)
        Oval,               // stadium: caps of radius r at (+-r/2, 0), walls y = +-r
        Staircase,          // complement of {x>=0, y>=0} U {x+y>=c}; one step of size c
        CircleSubset,       // finite subset of the circle |p| = r0
    };

    Tag tag = Tag::TwoPoint;
    double param = 1.0;       // alpha, rho, b, r, c or r0 depending on tag
    double eps = 0.0;         // FourPoint only, in (0, 1)
    bool periodic = false;    // Staircase: repeat the step along (c, -c)
    std::vector<Point2> pts;  // CircleSubset only

    static OracleShape two_point(double alpha);
    static OracleShape interval_complement();
    static OracleShape ball_complement(double rho);
    static OracleShape four_point(double b, double eps);
    static OracleShape strip(double r);
    static OracleShape rectangle(double r);
    static OracleShape oval(double r);
    static OracleShape staircase(double c, bool periodic = false);
    static OracleShape circle_subset(double r0, std::vector<Point2> pts);

    const char* name() const;
};

struct OracleValues {
    double dist2 = 0.0;
    double lower = 0.0;
    double mam = 0.0;
};

/// Exact branch evaluation; mam = (1+lambda)*(dist2 - lower).
OracleValues oracle_eval(const OracleShape& shape, double lambda, Point2 x);

/// Directly coded map branches, where the source formulas give them
/// (TwoPoint and FourPoint); used to cross-check oracle_eval.
double two_point_mam_direct(double alpha, double lambda, Point2 x);
double four_point_mam_direct(double b, double eps, double lambda, Point2 x);

/// Exact analytic medial axis of the shape; throws for shapes without a
/// recorded one (CircleSubset, periodic Staircase).
MedialDescriptor oracle_mk(const OracleShape& shape);

/// Exact large-lambda limit map; throws for unsupported shapes
/// (Strip, Rectangle, Oval).
double oracle_minf(const OracleShape& shape, Point2 x);

/// dist2 branch sampled over a grid (exact at cell centers).
ScalarField2 oracle_dist2_field(const OracleShape& shape, const GridSpec& spec);

/// Generating point set for the finite shapes (TwoPoint, FourPoint,
/// CircleSubset); throws otherwise.
PointSet2 oracle_point_set(const OracleShape& shape);

/// Closed boundary polygon for Rectangle and Oval (polyline sampled at
/// max_seg_len or finer along arcs); throws for other shapes.
std::vector<Point2> shape_boundary_polygon(const OracleShape& shape, double max_seg_len);

}  // namespace medax

#endif
