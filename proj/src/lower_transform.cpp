#include "medax/lower_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace medax {

double LowerTransformBackend::resolved_tol(const ScalarField2& g) const {
    if (tol > 0.0) return tol;
    const double range = g.max_value() - g.min_value();
    return 1e-10 * (range > 0.0 ? range : 1.0);
}

int LowerTransformBackend::resolved_max_iters(const GridSpec& spec) const {
    return max_iters > 0 ? max_iters : 10 * (spec.nx + spec.ny);
}

ScalarField2 lower_transform_opening(const ScalarField2& f, double lambda, int threads) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("lower_transform_opening: lambda must be > 0");
    return quad_dilate(quad_erode(f, lambda, threads), lambda, threads);
}

TransformDiag lower_transform_opening_diag(const ScalarField2& f, double lambda, int threads) {
    return quad_open_diag(f, lambda, threads);
}

ScalarField2 convex_envelope_grid(const ScalarField2& g, const LowerTransformBackend& cfg) {
    g.check_finite("convex_envelope_grid");
    const double tol = cfg.resolved_tol(g);
    const int max_iters = cfg.resolved_max_iters(g.spec);
    const int nx = g.spec.nx, ny = g.spec.ny;

    static constexpr int kDirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

    ScalarField2 u = g;
    ScalarField2 next = g;
    double residual = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        residual = 0.0;
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                double v = g.at(i, j);
                for (const auto& d : kDirs) {
                    const int ia = i + d[0], ja = j + d[1];
                    const int ib = i - d[0], jb = j - d[1];
                    if (ia < 0 || ia >= nx || ib < 0 || ib >= nx || ja < 0 || ja >= ny ||
                        jb < 0 || jb >= ny)
                        continue;
                    v = std::min(v, 0.5 * (u.at(ia, ja) + u.at(ib, jb)));
                }
                next.at(i, j) = v;
                residual = std::max(residual, u.at(i, j) - v);
            }
        }
        std::swap(u.values, next.values);
        if (residual <= tol) return u;
    }
    throw ConvergenceError(residual, max_iters);
}

namespace {

ScalarField2 add_origin_quadratic(const ScalarField2& f, double lambda, double sign) {
    ScalarField2 out = f;
    for (int j = 0; j < f.spec.ny; ++j) {
        const double y = j * f.spec.spacing;
        for (int i = 0; i < f.spec.nx; ++i) {
            const double x = i * f.spec.spacing;
            out.at(i, j) += sign * lambda * (x * x + y * y);
        }
    }
    return out;
}

}  // namespace

ScalarField2 lower_transform_iterative(const ScalarField2& f, double lambda,
                                       const LowerTransformBackend& cfg) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("lower_transform_iterative: lambda must be > 0");
    ScalarField2 aug = add_origin_quadratic(f, lambda, +1.0);
    ScalarField2 env = convex_envelope_grid(aug, cfg);
    return add_origin_quadratic(env, lambda, -1.0);
}

ScalarField2 lower_transform(const ScalarField2& f, double lambda,
                             const LowerTransformBackend& cfg, int threads) {
    if (cfg.kind == LowerTransformBackend::Kind::Opening)
        return lower_transform_opening(f, lambda, threads);
    return lower_transform_iterative(f, lambda, cfg);
}

double locality_radius(double dist_at_x, double lambda) {
    if (dist_at_x < 0.0) throw std::invalid_argument("locality_radius: dist must be >= 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("locality_radius: lambda must be > 0");
    return 2.0 * dist_at_x / lambda;
}

double lower_transform_at(const ScalarField2& f, const ScalarField2& distfield,
                          double lambda, Point2 x) {
    if (!(f.spec == distfield.spec))
        throw std::invalid_argument("lower_transform_at: mismatched grids");
    if (!(lambda > 0.0)) throw std::invalid_argument("lower_transform_at: lambda must be > 0");
    const int i0 = f.spec.nearest_i(x.x);
    const int j0 = f.spec.nearest_j(x.y);
    const double d = std::sqrt(std::max(0.0, distfield.at(i0, j0)));
    const double r = locality_radius(d, lambda);
    const double h = f.spec.spacing;
    const int rc = static_cast<int>(std::ceil(r / h));
    if (rc == 0) return f.at(i0, j0);
    if (i0 - rc < 0 || i0 + rc >= f.spec.nx || j0 - rc < 0 || j0 + rc >= f.spec.ny)
        throw std::out_of_range("lower_transform_at: border-invalid (window exceeds grid)");

    // Erode the window, then dilate at the center only.  Every eroded
    // sample yields a parabola below f on the window, i.e. an affine
    // minorant of f + lambda*|.-x|^2 there, so the result never exceeds
    // the windowed envelope the locality property equates with the global
    // transform; the optimal parabola's support lies inside the window,
    // which gives the matching lower bound.
    const int n = 2 * rc + 1;
    GridSpec wspec{f.spec.origin_x + (i0 - rc) * h, f.spec.origin_y + (j0 - rc) * h, h, n, n};
    ScalarField2 g(wspec, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g.at(i, j) = f.at(i0 - rc + i, j0 - rc + j);
    ScalarField2 eroded = quad_erode(g, lambda);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double dx = (i - rc) * h;
            const double dy = (j - rc) * h;
            best = std::max(best, eroded.at(i, j) - lambda * (dx * dx + dy * dy));
        }
    return best;
}

}  // namespace medax
