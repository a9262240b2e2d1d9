#ifndef MEDAX_MEDIAL_AXIS_MAP_HPP
#define MEDAX_MEDIAL_AXIS_MAP_HPP

#include <utility>
#include <vector>

#include "medax/lower_transform.hpp"

namespace medax {

struct MamParams {
    double lambda = 1.0;
    LowerTransformBackend backend;
    double nearest_tol = 1e-9;  // relative tolerance for nearest-set membership
    int threads = 1;

    void validate() const {
        if (!(lambda > 0.0)) throw std::invalid_argument("MamParams: lambda must be > 0");
        if (nearest_tol < 0.0 || nearest_tol > 1e-3)
            throw std::invalid_argument("MamParams: nearest_tol outside [0, 1e-3]");
    }
};

/// One medial-axis-map computation: m = (1+lambda) * (dist2 - lower),
/// clamped at 0 against round-off.  `trusted` marks cells whose values do
/// not depend on what lies beyond the grid border; border_margin is the
/// smallest margin (in cells) containing every untrusted cell.
struct MamResult {
    ScalarField2 m_field;
    ScalarField2 dist2;
    ScalarField2 lower;
    BinaryMask2 trusted;
    int border_margin = 0;
};

MamResult mam_field(const PointSet2& k, const GridSpec& spec, const MamParams& p);
MamResult mam_field(const BinaryMask2& k, const MamParams& p);

/// Build the map from a precomputed squared-distance field (used when the
/// field is known in closed form and need not be rasterized).
MamResult mam_from_dist2(const ScalarField2& dist2, const MamParams& p);

struct BoundaryEquivalenceReport {
    double discrepancy = 0.0;
    double bound = 0.0;
    std::size_t cells_checked = 0;
    bool pass = false;
};

/// Computes the map twice, with K the boundary cells of the mask and K the
/// complement cells, and compares them over interior trusted cells
/// (they agree in the continuum).
BoundaryEquivalenceReport mam_from_mask_boundary_equivalence(const BinaryMask2& mask,
                                                             const MamParams& p);

/// Pointwise square root; rejects values below -1e-9.
ScalarField2 linear_mam(const ScalarField2& m);

/// Points of k within (1 + nearest_tol) of the minimal distance to x.
PointSet2 nearest_set(const PointSet2& k, Point2 x, double nearest_tol);

/// dist^2(x; K) - dist^2(x; hull of nearest set); the pointwise limit of
/// the map for large lambda.
double landscape_map(const PointSet2& k, Point2 x, double nearest_tol);

/// Largest angle subtended at x by two nearest points (radians, [0, pi]);
/// 0 for a singleton nearest set.  Throws when x lies in K.
double separation_angle(const PointSet2& k, Point2 x, double nearest_tol);

/// For each lambda, |M_lambda(x) - landscape(x)| measured on the grid.
std::vector<std::pair<double, double>> limit_convergence_probe(const PointSet2& k, Point2 x,
                                                               const std::vector<double>& lambdas,
                                                               const GridSpec& spec,
                                                               double nearest_tol = 1e-9);

struct AngleBoundReport {
    double theta = 0.0;
    double measured = 0.0;   // numeric M at x
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double slack = 0.0;      // tolerance granted
    bool pass = false;
};

/// Checks sin^2(theta/2) * dist^2 <= M_lambda(x) <= dist^2 within
/// 5*h*(1+lambda) at a numerically equidistant point.
AngleBoundReport angle_bound_check(const PointSet2& k, Point2 x, double lambda,
                                   const GridSpec& spec, double nearest_tol = 1e-9);
AngleBoundReport angle_bound_check(const PointSet2& k, Point2 x, const MamResult& r,
                                   double lambda, double nearest_tol = 1e-9);

/// Cells where m >= threshold (closed suplevel set).
BinaryMask2 suplevel_mask(const ScalarField2& m, double threshold);

/// (1+lambda)*lower - lambda*dist2: the large-lambda approximation of the
/// squared distance to the hull of the nearest set.  Clamped at 0 against
/// round-off below -1e-9.
ScalarField2 asymptotic_hull_distance(const ScalarField2& dist2, const ScalarField2& lower,
                                      double lambda);

struct SupportReport {
    std::size_t support_cells = 0;
    std::size_t violations = 0;
    double worst = 0.0;  // max of lambda*dist(x;M_K) - dist(x;K) - 5h over support
    double cutoff = 0.0;
    bool pass = false;
};

/// Verifies that every trusted cell with m above the cutoff
/// 10*h*(1+lambda)^2 satisfies lambda*dist(x; M_K) <= dist(x; K) + 5h,
/// with M_K given analytically.
SupportReport support_containment_check(const MamResult& r, const MedialDescriptor& mk,
                                        double lambda);

}  // namespace medax

#endif
