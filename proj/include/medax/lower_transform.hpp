#ifndef MEDAX_LOWER_TRANSFORM_HPP
#define MEDAX_LOWER_TRANSFORM_HPP

#include "medax/edt.hpp"
#include "medax/grid.hpp"

namespace medax {

/// Thrown when the iterative envelope fails to reach its stopping
/// threshold; carries the last per-sweep residual.
struct ConvergenceError : std::runtime_error {
    double residual;
    int iterations;
    ConvergenceError(double r, int it)
        : std::runtime_error("convex_envelope_grid: no convergence, residual " +
                             std::to_string(r) + " after " + std::to_string(it) + " sweeps"),
          residual(r),
          iterations(it) {}
};

struct LowerTransformBackend {
    enum class Kind { Opening, IterativeEnvelope };
    Kind kind = Kind::Opening;
    double tol = 0.0;    // 0: auto, 1e-10 * (max g - min g)
    int max_iters = 0;   // 0: auto, 10 * (nx + ny)

    double resolved_tol(const ScalarField2& g) const;
    int resolved_max_iters(const GridSpec& spec) const;
};

/// Lower transform via the quadratic opening: dilate(erode(f)).
ScalarField2 lower_transform_opening(const ScalarField2& f, double lambda, int threads = 1);

/// Same, with suspect-cell diagnostics from the separable passes.
TransformDiag lower_transform_opening_diag(const ScalarField2& f, double lambda,
                                           int threads = 1);

/// Largest function <= g that is midpoint-convex along the four stencil
/// directions (axes and diagonals), computed by Jacobi sweeps from u = g.
/// Stops when the max per-sweep change drops to cfg tol; throws
/// ConvergenceError otherwise.
ScalarField2 convex_envelope_grid(const ScalarField2& g, const LowerTransformBackend& cfg);

/// Lower transform via the grid convex envelope of f + lambda*|x|^2, with
/// |x| measured in world coordinates relative to the grid origin.
ScalarField2 lower_transform_iterative(const ScalarField2& f, double lambda,
                                       const LowerTransformBackend& cfg);

ScalarField2 lower_transform(const ScalarField2& f, double lambda,
                             const LowerTransformBackend& cfg, int threads = 1);

/// Radius of the window that suffices to evaluate the lower transform of a
/// squared-distance field at a point: 2 * dist(x; K) / lambda.
double locality_radius(double dist_at_x, double lambda);

/// Windowed point evaluation of the lower transform of a squared-distance
/// field.  The window of locality_radius around x must lie inside the grid;
/// otherwise throws std::out_of_range ("border-invalid").  x is snapped to
/// the nearest sample.
double lower_transform_at(const ScalarField2& f, const ScalarField2& distfield,
                          double lambda, Point2 x);

}  // namespace medax

#endif
