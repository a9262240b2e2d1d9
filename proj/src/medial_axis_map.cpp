#include "medax/medial_axis_map.hpp"

#include <algorithm>
#include <cmath>

namespace medax {

namespace {

// (1+lambda)*(dist2 - lower) with the round-off clamp from the contract:
// values in [-1e-9, 0) snap to 0, anything lower is a broken backend.
ScalarField2 scaled_ridge(const ScalarField2& dist2, const ScalarField2& lower, double lambda) {
    ScalarField2 m(dist2.spec, 0.0);
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        double v = (1.0 + lambda) * (dist2.values[i] - lower.values[i]);
        if (v < 0.0) {
            if (v < -1e-9) throw std::runtime_error("mam_field: negative map value " +
                                                    std::to_string(v));
            v = 0.0;
        }
        m.values[i] = v;
    }
    return m;
}

}  // namespace

MamResult mam_from_dist2(const ScalarField2& dist2, const MamParams& p) {
    p.validate();
    dist2.check_finite("mam_from_dist2");

    TransformDiag diag = quad_open_diag(dist2, p.lambda, p.threads);
    ScalarField2 lower = diag.field;
    if (p.backend.kind == LowerTransformBackend::Kind::IterativeEnvelope)
        lower = lower_transform_iterative(dist2, p.lambda, p.backend);

    MamResult r;
    r.m_field = scaled_ridge(dist2, lower, p.lambda);
    r.dist2 = dist2;
    r.lower = std::move(lower);
    r.border_margin = diag.border_margin;
    r.trusted = BinaryMask2(dist2.spec, false);
    for (std::size_t i = 0; i < r.trusted.bits.size(); ++i)
        r.trusted.bits[i] = diag.suspect.bits[i] ? 0 : 1;
    return r;
}

MamResult mam_field(const PointSet2& k, const GridSpec& spec, const MamParams& p) {
    if (k.empty()) throw EmptySetError("mam_field: empty set K");
    return mam_from_dist2(edt_points(k, spec), p);
}

MamResult mam_field(const BinaryMask2& k, const MamParams& p) {
    if (!k.any()) throw EmptySetError("mam_field: empty set K");
    return mam_from_dist2(edt_mask(k), p);
}

BoundaryEquivalenceReport mam_from_mask_boundary_equivalence(const BinaryMask2& mask,
                                                             const MamParams& p) {
    p.validate();
    BinaryMask2 interior = interior_cells(mask);
    if (!interior.any())
        throw std::invalid_argument("mam_from_mask_boundary_equivalence: mask has no interior");

    BinaryMask2 complement(mask.spec, false);
    for (std::size_t i = 0; i < mask.bits.size(); ++i)
        complement.bits[i] = mask.bits[i] ? 0 : 1;
    if (!complement.any())
        throw std::invalid_argument("mam_from_mask_boundary_equivalence: all-true mask");

    MamResult from_boundary = mam_field(boundary_cells(mask), p);
    MamResult from_complement = mam_field(complement, p);

    BoundaryEquivalenceReport rep;
    rep.bound = 10.0 * mask.spec.spacing * (1.0 + p.lambda);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        if (!interior.bits[i]) continue;
        if (!from_boundary.trusted.bits[i] || !from_complement.trusted.bits[i]) continue;
        ++rep.cells_checked;
        rep.discrepancy = std::max(
            rep.discrepancy,
            std::abs(from_boundary.m_field.values[i] - from_complement.m_field.values[i]));
    }
    rep.pass = rep.cells_checked > 0 && rep.discrepancy <= rep.bound;
    return rep;
}

ScalarField2 linear_mam(const ScalarField2& m) {
    ScalarField2 out = m;
    for (auto& v : out.values) {
        if (v < 0.0) {
            if (v < -1e-9) throw std::invalid_argument("linear_mam: negative input");
            v = 0.0;
        }
        v = std::sqrt(v);
    }
    return out;
}

PointSet2 nearest_set(const PointSet2& k, Point2 x, double nearest_tol) {
    if (k.empty()) throw EmptySetError("nearest_set: empty set K");
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& p : k.points) dmin = std::min(dmin, norm(p - x));
    const double cut = (1.0 + nearest_tol) * dmin;
    std::vector<Point2> sel;
    for (const auto& p : k.points)
        if (norm(p - x) <= cut) sel.push_back(p);
    PointSet2 out;
    out.points = std::move(sel);  // already deduplicated in k
    return out;
}

double landscape_map(const PointSet2& k, Point2 x, double nearest_tol) {
    PointSet2 ns = nearest_set(k, x, nearest_tol);
    double d2 = std::numeric_limits<double>::infinity();
    for (const auto& p : k.points) d2 = std::min(d2, dist2_point(x, p));
    if (ns.size() == 1) return 0.0;
    const double hull_d2 = dist2_convex_polygon(x, convex_hull(ns.points));
    return std::max(0.0, d2 - hull_d2);
}

double separation_angle(const PointSet2& k, Point2 x, double nearest_tol) {
    PointSet2 ns = nearest_set(k, x, nearest_tol);
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& p : k.points) dmin = std::min(dmin, norm(p - x));
    if (dmin <= 1e-12) throw std::invalid_argument("separation_angle: x lies in K");
    if (ns.size() < 2) return 0.0;
    double best = 0.0;
    for (std::size_t a = 0; a < ns.size(); ++a) {
        for (std::size_t b = a + 1; b < ns.size(); ++b) {
            const Point2 u = ns.points[a] - x;
            const Point2 v = ns.points[b] - x;
            const double c = std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0);
            best = std::max(best, std::acos(c));
        }
    }
    return best;
}

std::vector<std::pair<double, double>> limit_convergence_probe(const PointSet2& k, Point2 x,
                                                               const std::vector<double>& lambdas,
                                                               const GridSpec& spec,
                                                               double nearest_tol) {
    const double minf = landscape_map(k, x, nearest_tol);
    ScalarField2 dist2 = edt_points(k, spec);
    std::vector<std::pair<double, double>> out;
    out.reserve(lambdas.size());
    for (double lam : lambdas) {
        MamParams p;
        p.lambda = lam;
        p.nearest_tol = std::min(nearest_tol, 1e-3);
        MamResult r = mam_from_dist2(dist2, p);
        const double m = r.m_field.at_nearest(x);
        out.emplace_back(lam, std::abs(m - minf));
    }
    return out;
}

AngleBoundReport angle_bound_check(const PointSet2& k, Point2 x, const MamResult& r,
                                   double lambda, double nearest_tol) {
    AngleBoundReport rep;
    rep.theta = separation_angle(k, x, nearest_tol);
    const double d2 = r.dist2.at_nearest(x);
    const double s = std::sin(rep.theta / 2.0);
    rep.lower_bound = s * s * d2;
    rep.upper_bound = d2;
    rep.measured = r.m_field.at_nearest(x);
    rep.slack = 5.0 * r.dist2.spec.spacing * (1.0 + lambda);
    rep.pass = rep.measured >= rep.lower_bound - rep.slack &&
               rep.measured <= rep.upper_bound + rep.slack;
    return rep;
}

AngleBoundReport angle_bound_check(const PointSet2& k, Point2 x, double lambda,
                                   const GridSpec& spec, double nearest_tol) {
    MamParams p;
    p.lambda = lambda;
    MamResult r = mam_field(k, spec, p);
    return angle_bound_check(k, x, r, lambda, nearest_tol);
}

BinaryMask2 suplevel_mask(const ScalarField2& m, double threshold) {
    BinaryMask2 out(m.spec, false);
    for (std::size_t i = 0; i < m.values.size(); ++i)
        out.bits[i] = m.values[i] >= threshold ? 1 : 0;
    return out;
}

ScalarField2 asymptotic_hull_distance(const ScalarField2& dist2, const ScalarField2& lower,
                                      double lambda) {
    if (!(dist2.spec == lower.spec))
        throw std::invalid_argument("asymptotic_hull_distance: mismatched grids");
    ScalarField2 out(dist2.spec, 0.0);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double v = (1.0 + lambda) * lower.values[i] - lambda * dist2.values[i];
        if (v < 0.0) {
            if (v < -1e-9) throw std::runtime_error("asymptotic_hull_distance: negative value");
            v = 0.0;
        }
        out.values[i] = v;
    }
    return out;
}

SupportReport support_containment_check(const MamResult& r, const MedialDescriptor& mk,
                                        double lambda) {
    const double h = r.m_field.spec.spacing;
    SupportReport rep;
    rep.cutoff = 10.0 * h * (1.0 + lambda) * (1.0 + lambda);
    rep.worst = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < r.m_field.spec.ny; ++j) {
        for (int i = 0; i < r.m_field.spec.nx; ++i) {
            if (!r.trusted.get(i, j)) continue;
            if (r.m_field.at(i, j) <= rep.cutoff) continue;
            ++rep.support_cells;
            const Point2 x = r.m_field.spec.world(i, j);
            const double dk = std::sqrt(std::max(0.0, r.dist2.at(i, j)));
            const double slack = lambda * mk.dist(x) - dk - 5.0 * h;
            rep.worst = std::max(rep.worst, slack);
            if (slack > 0.0) ++rep.violations;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

}  // namespace medax
