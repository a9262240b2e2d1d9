#include "medax/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "medax/medial_axis_map.hpp"
#include "medax/oracles.hpp"
#include "medax/stability.hpp"

namespace medax {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["all_pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["measured"] = c.measured;
        jc["bound"] = c.bound;
        jc["slack"] = c.slack();
        jc["pass"] = c.pass;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

namespace {

CheckResult make_check(std::string name, double measured, double bound) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.bound = bound;
    c.pass = measured <= bound;
    return c;
}

GridSpec square_grid(double lo, double hi, int n) {
    return GridSpec{lo, lo, (hi - lo) / (n - 1), n, n};
}

MamResult shape_mam(const OracleShape& shape, const GridSpec& spec, double lambda) {
    MamParams p;
    p.lambda = lambda;
    return mam_from_dist2(oracle_dist2_field(shape, spec), p);
}

// sup over trusted cells of |numeric map - closed form|
double sup_err_vs_oracle(const MamResult& r, const OracleShape& shape, double lambda) {
    double sup = 0.0;
    const GridSpec& spec = r.m_field.spec;
    for (int j = 0; j < spec.ny; ++j)
        for (int i = 0; i < spec.nx; ++i) {
            if (!r.trusted.get(i, j)) continue;
            const OracleValues v = oracle_eval(shape, lambda, spec.world(i, j));
            sup = std::max(sup, std::abs(r.m_field.at(i, j) - v.mam));
        }
    return sup;
}

// full width of {m > cutoff} along the grid row nearest to y, trusted only
double slab_width_x(const MamResult& r, double y, double cutoff) {
    const GridSpec& spec = r.m_field.spec;
    const int j = spec.nearest_j(y);
    double xmax = -1.0;
    for (int i = 0; i < spec.nx; ++i) {
        if (!r.trusted.get(i, j)) continue;
        if (r.m_field.at(i, j) > cutoff) xmax = std::max(xmax, std::abs(spec.world(i, j).x));
    }
    return xmax < 0.0 ? 0.0 : 2.0 * xmax;
}

double slab_width_y(const MamResult& r, double x, double cutoff) {
    const GridSpec& spec = r.m_field.spec;
    const int i = spec.nearest_i(x);
    double ymax = -1.0;
    for (int j = 0; j < spec.ny; ++j) {
        if (!r.trusted.get(i, j)) continue;
        if (r.m_field.at(i, j) > cutoff) ymax = std::max(ymax, std::abs(spec.world(i, j).y));
    }
    return ymax < 0.0 ? 0.0 : 2.0 * ymax;
}

PointSet2 random_points(std::mt19937_64& rng, int n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return PointSet2(std::move(pts));
}

BinaryMask2 random_mask(std::mt19937_64& rng, const GridSpec& spec, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    BinaryMask2 mask(spec, false);
    for (auto& b : mask.bits) b = u(rng) < density ? 1 : 0;
    if (!mask.any()) mask.bits[mask.bits.size() / 2] = 1;
    return mask;
}

std::vector<OracleShape> corpus_shapes() {
    const double r0 = 1.5;
    std::vector<Point2> circle_pts;
    for (int i = 0; i < 6; ++i) {
        const double a = 0.3 + 2.0 * std::acos(-1.0) * i / 6.0;
        circle_pts.push_back({r0 * std::cos(a), r0 * std::sin(a)});
    }
    return {
        OracleShape::two_point(1.0),
        OracleShape::interval_complement(),
        OracleShape::ball_complement(1.5),
        OracleShape::four_point(2.0, 0.5),
        OracleShape::strip(1.0),
        OracleShape::rectangle(1.2),
        OracleShape::oval(1.2),
        OracleShape::staircase(1.0),
        OracleShape::circle_subset(r0, circle_pts),
    };
}

GridSpec corpus_grid(const OracleShape& shape, int n) {
    if (shape.tag == OracleShape::Tag::Staircase) {
        const double h = 4.0 / (n - 1);
        return GridSpec{-1.0, -1.0, h, n, n};
    }
    return square_grid(-3.0, 3.0, n);
}

}  // namespace

// Criterion 1: two-point map vs the closed form on a fine strip.
std::vector<CheckResult> check_two_point_exactness() {
    std::vector<CheckResult> out;
    const double alpha = 1.0, h = 1e-3;
    const GridSpec spec{-3.0, -0.02, h, 6001, 41};
    const OracleShape shape = OracleShape::two_point(alpha);
    const ScalarField2 dist2 = oracle_dist2_field(shape, spec);
    for (double lambda : {0.5, 1.0, 4.0}) {
        MamParams p;
        p.lambda = lambda;
        MamResult r = mam_from_dist2(dist2, p);
        const double sup = sup_err_vs_oracle(r, shape, lambda);
        std::ostringstream name;
        name << "two_point.sup_err.lambda=" << lambda;
        out.push_back(make_check(name.str(), sup, 5.0 * h * (1.0 + lambda) * (1.0 + lambda)));
        if (lambda == 1.0) {
            const double height = r.m_field.at_nearest({0.0, 0.0});
            out.push_back(make_check("two_point.branch_height.lambda=1",
                                     std::abs(height - alpha * alpha), 5e-3));
        }
    }
    return out;
}

// Criterion 2: interval-complement sharpness.  The transition-point probe
// is coded exactly as specified; |dist2 - lower| has a double root at the
// seam, so a threshold crossing at 1e-2*(1+lambda) sits ~0.1 away from the
// seam and the 3h localization cannot hold (see the analysis shipped with
// the test output).
std::vector<CheckResult> check_interval_sharpness() {
    std::vector<CheckResult> out;
    const double lambda = 1.0, h = 1e-3;
    const GridSpec spec{-3.0, -0.02, h, 6001, 41};
    const OracleShape shape = OracleShape::interval_complement();
    MamResult r = shape_mam(shape, spec, lambda);

    const double center = r.lower.at_nearest({0.0, 0.0});
    out.push_back(make_check("interval.lower_at_0", std::abs(center - 0.5), 2e-3));

    const int j = spec.nearest_j(0.0);
    const double threshold = 1e-2 * (1.0 + lambda);
    double x_detect = 0.0;
    for (int i = spec.nx - 1; i >= spec.nx / 2; --i) {
        if (!r.trusted.get(i, j)) continue;
        const double diff = r.dist2.at(i, j) - r.lower.at(i, j);
        if (diff > threshold) {
            x_detect = spec.world(i, j).x;
            break;
        }
    }
    const double seam = 1.0 / (1.0 + lambda);
    out.push_back(make_check("interval.transition_within_3h", std::abs(x_detect - seam),
                             3.0 * h));
    return out;
}

// Criterion 3: four-point branch heights and support slab widths.
std::vector<CheckResult> check_four_point_heights() {
    std::vector<CheckResult> out;
    const double b = 2.0, eps = 0.5, lambda = 4.0, h = 5e-3;
    const GridSpec spec = square_grid(-3.0, 3.0, 1201);
    const OracleShape shape = OracleShape::four_point(b, eps);
    MamResult r = shape_mam(shape, spec, lambda);

    const double main = r.m_field.at_nearest({0.0, 1.0});
    const double minor = r.m_field.at_nearest({1.0, 0.0});
    const double vertex = r.m_field.at_nearest({0.0, 0.0});
    out.push_back(make_check("four_point.main_branch", std::abs(main - b * b), 2e-2));
    out.push_back(
        make_check("four_point.minor_branch", std::abs(minor - eps * eps * b * b), 2e-2));
    out.push_back(make_check("four_point.vertex",
                             std::abs(vertex - b * b * (1.0 + eps * eps)), 2e-2));

    const double cutoff = std::pow((1.0 + lambda) * 1.5 * h, 2);
    const double w_main = slab_width_x(r, 1.0, cutoff);
    const double w_minor = slab_width_y(r, 1.0, cutoff);
    out.push_back(make_check("four_point.main_slab_width",
                             std::abs(w_main - 2.0 * b / (1.0 + lambda)), 5.0 * h));
    out.push_back(make_check("four_point.minor_slab_width",
                             std::abs(w_minor - 2.0 * eps * b / (1.0 + lambda)), 5.0 * h));
    return out;
}

// Criterion 4: staircase plateau, landscape probe, threshold behaviour.
std::vector<CheckResult> check_staircase_plateau() {
    std::vector<CheckResult> out;
    const double c = 1.0, lambda = 9.0, h = 5e-3;
    const GridSpec spec{-1.0, -1.0, h, 901, 901};
    const OracleShape shape = OracleShape::staircase(c);
    MamResult r = shape_mam(shape, spec, lambda);

    const double plateau = r.m_field.at_nearest({2.0, 2.0});
    out.push_back(make_check("staircase.plateau_at_2_2", std::abs(plateau - 0.5), 2e-2));

    // landscape probe against the rasterized set boundary
    BinaryMask2 set_mask(spec, false);
    for (std::size_t i = 0; i < set_mask.bits.size(); ++i)
        set_mask.bits[i] = r.dist2.values[i] == 0.0 ? 1 : 0;
    PointSet2 kb = mask_to_points(boundary_cells(set_mask));
    const double minf = landscape_map(kb, {0.5, 0.5}, 2.0 * h / 0.5);
    out.push_back(make_check("staircase.landscape_at_half", std::abs(minf - 0.125), 2e-2));

    BinaryMask2 hi = suplevel_mask(r.m_field, 0.6);
    BinaryMask2 lo = suplevel_mask(r.m_field, 0.4);
    std::size_t hi_count = 0, lo_count = 0;
    for (std::size_t i = 0; i < hi.bits.size(); ++i) {
        hi_count += hi.bits[i] && r.trusted.bits[i];
        lo_count += lo.bits[i] && r.trusted.bits[i];
    }
    out.push_back(make_check("staircase.threshold_0.6_empty",
                             static_cast<double>(hi_count), 0.0));
    CheckResult keep = make_check("staircase.threshold_0.4_retains", 0.0, 0.0);
    keep.measured = static_cast<double>(lo_count);
    keep.bound = 1.0;
    keep.pass = lo_count > 0;
    out.push_back(keep);
    return out;
}

// Criterion 5: opening vs iterative envelope on the shape corpus and
// seeded random masks.
std::vector<CheckResult> check_backend_equivalence(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const std::vector<double> lambdas = {0.5, 2.0, 8.0};
    const int n = 65;

    auto compare = [&](const ScalarField2& f, double lambda, const std::string& name) {
        TransformDiag diag = lower_transform_opening_diag(f, lambda);
        LowerTransformBackend cfg;
        cfg.kind = LowerTransformBackend::Kind::IterativeEnvelope;
        cfg.max_iters = 60 * (f.spec.nx + f.spec.ny);
        if (opt.iter_tol_override > 0.0) cfg.tol = opt.iter_tol_override;
        ScalarField2 it = lower_transform_iterative(f, lambda, cfg);
        double sup = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            if (diag.suspect.bits[i]) continue;
            sup = std::max(sup, std::abs(diag.field.values[i] - it.values[i]));
        }
        out.push_back(make_check(name, sup, 5.0 * f.spec.spacing * (1.0 + lambda)));
    };

    for (const auto& shape : corpus_shapes()) {
        const GridSpec spec = corpus_grid(shape, n);
        const ScalarField2 f = oracle_dist2_field(shape, spec);
        for (double lambda : lambdas) {
            std::ostringstream name;
            name << "backends." << shape.name() << ".lambda=" << lambda;
            compare(f, lambda, name.str());
        }
    }

    std::mt19937_64 rng(opt.seed);
    const int nmasks = opt.quick ? 5 : 20;
    const GridSpec mspec = square_grid(-1.0, 1.0, 33);
    for (int m = 0; m < nmasks; ++m) {
        BinaryMask2 mask = random_mask(rng, mspec, 0.08);
        const ScalarField2 f = edt_mask(mask);
        for (double lambda : lambdas) {
            std::ostringstream name;
            name << "backends.mask" << m << ".lambda=" << lambda;
            compare(f, lambda, name.str());
        }
    }
    return out;
}

// Criterion 6: universal bounds on the corpus, plus the landscape lower
// bound at numerically equidistant samples of the point shapes.
std::vector<CheckResult> check_universal_bounds(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int n = 161;
    const double lambda = 2.0;

    for (const auto& shape : corpus_shapes()) {
        const GridSpec spec = corpus_grid(shape, n);
        MamResult r = shape_mam(shape, spec, lambda);
        const double h = spec.spacing;
        double worst_upper = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) {
                if (!r.trusted.get(i, j)) continue;
                worst_upper =
                    std::max(worst_upper, r.m_field.at(i, j) - r.dist2.at(i, j));
            }
        std::ostringstream name;
        name << "bounds.upper." << shape.name();
        out.push_back(make_check(name.str(), worst_upper, 5.0 * h * (1.0 + lambda)));
    }

    // lower bound at equidistant cells of point sets (closed-form and seeded)
    std::mt19937_64 rng(opt.seed + 1);
    std::vector<std::pair<std::string, PointSet2>> point_sets;
    point_sets.emplace_back("two_point", oracle_point_set(OracleShape::two_point(1.0)));
    point_sets.emplace_back("four_point",
                            oracle_point_set(OracleShape::four_point(2.0, 0.5)));
    for (int s = 0; s < 3; ++s)
        point_sets.emplace_back("random" + std::to_string(s), random_points(rng, 6, -1.5, 1.5));

    for (const auto& [label, k] : point_sets) {
        const GridSpec spec = square_grid(-3.0, 3.0, n);
        const double h = spec.spacing;
        MamParams p;
        p.lambda = lambda;
        MamResult r = mam_field(k, spec, p);
        double worst = -std::numeric_limits<double>::infinity();
        std::size_t counted = 0;
        for (int j = 0; j < spec.ny; ++j)
            for (int i = 0; i < spec.nx; ++i) {
                if (!r.trusted.get(i, j)) continue;
                const Point2 x = spec.world(i, j);
                const double d = std::sqrt(std::max(0.0, r.dist2.at(i, j)));
                if (d <= 2.0 * h) continue;
                PointSet2 ns = nearest_set(k, x, 2.0 * h / d);
                if (ns.size() < 2) continue;
                ++counted;
                const double ml = landscape_map(k, x, 2.0 * h / d);
                worst = std::max(worst, ml - r.m_field.at(i, j));
            }
        std::ostringstream name;
        name << "bounds.landscape_lower." << label << " (cells=" << counted << ")";
        out.push_back(make_check(name.str(), worst, 5.0 * h * (1.0 + lambda)));
    }
    return out;
}

// Criterion 7: gradient inequality and gradient Lipschitz quotient of the
// lower transform, by central differences on trusted cells.
std::vector<CheckResult> check_gradient_bounds(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int n = opt.quick ? 41 : 81;
    const std::vector<double> lambdas = {0.5, 2.0, 8.0};

    for (const auto& shape : corpus_shapes()) {
        const GridSpec spec = corpus_grid(shape, n);
        const ScalarField2 dist2 = oracle_dist2_field(shape, spec);
        const double h = spec.spacing;
        for (double lambda : lambdas) {
            MamParams p;
            p.lambda = lambda;
            MamResult r = mam_from_dist2(dist2, p);
            const auto& low = r.lower;

            auto trusted3 = [&](int i, int j) {
                for (int dj = -1; dj <= 1; ++dj)
                    for (int di = -1; di <= 1; ++di)
                        if (!r.trusted.get(i + di, j + dj)) return false;
                return true;
            };

            double worst_grad = -std::numeric_limits<double>::infinity();
            double worst_lip = -std::numeric_limits<double>::infinity();
            std::vector<double> gx(spec.size(), 0.0), gy(spec.size(), 0.0);
            std::vector<std::uint8_t> ok(spec.size(), 0);
            for (int j = 1; j < spec.ny - 1; ++j)
                for (int i = 1; i < spec.nx - 1; ++i) {
                    if (!trusted3(i, j)) continue;
                    const double dx = (low.at(i + 1, j) - low.at(i - 1, j)) / (2.0 * h);
                    const double dy = (low.at(i, j + 1) - low.at(i, j - 1)) / (2.0 * h);
                    gx[spec.idx(i, j)] = dx;
                    gy[spec.idx(i, j)] = dy;
                    ok[spec.idx(i, j)] = 1;
                    worst_grad = std::max(
                        worst_grad, dx * dx + dy * dy - 4.0 * low.at(i, j));
                }
            for (int j = 1; j < spec.ny - 1; ++j)
                for (int i = 1; i < spec.nx - 1; ++i) {
                    if (!ok[spec.idx(i, j)]) continue;
                    for (int axis = 0; axis < 2; ++axis) {
                        const int i2 = axis == 0 ? i + 1 : i;
                        const int j2 = axis == 0 ? j : j + 1;
                        if (i2 >= spec.nx - 1 || j2 >= spec.ny - 1) continue;
                        if (!ok[spec.idx(i2, j2)]) continue;
                        const double du = gx[spec.idx(i2, j2)] - gx[spec.idx(i, j)];
                        const double dv = gy[spec.idx(i2, j2)] - gy[spec.idx(i, j)];
                        worst_lip =
                            std::max(worst_lip, std::sqrt(du * du + dv * dv) / h -
                                                    2.0 * std::max(1.0, lambda));
                    }
                }
            const double tol = 20.0 * h * (1.0 + lambda) * (1.0 + lambda);
            std::ostringstream g1, g2;
            g1 << "gradient.inequality." << shape.name() << ".lambda=" << lambda;
            g2 << "gradient.lipschitz." << shape.name() << ".lambda=" << lambda;
            out.push_back(make_check(g1.str(), worst_grad, tol));
            out.push_back(make_check(g2.str(), worst_lip, tol));
        }
    }
    return out;
}

// Criterion 8: support containment in the shrinking neighbourhood of the
// analytic medial axis, and the width halving under doubled lambda.
std::vector<CheckResult> check_support_containment() {
    std::vector<CheckResult> out;
    struct Case {
        OracleShape shape;
        double lambda;
        GridSpec spec;
    };
    const std::vector<Case> cases = {
        {OracleShape::two_point(1.0), 1.0, square_grid(-3.0, 3.0, 601)},
        {OracleShape::four_point(2.0, 0.5), 4.0, square_grid(-3.0, 3.0, 601)},
        {OracleShape::rectangle(1.2), 4.0, square_grid(-3.0, 3.0, 601)},
        {OracleShape::staircase(1.0), 9.0, GridSpec{-1.0, -1.0, 0.01, 451, 451}},
    };
    for (const auto& c : cases) {
        MamResult r = shape_mam(c.shape, c.spec, c.lambda);
        SupportReport rep = support_containment_check(r, oracle_mk(c.shape), c.lambda);
        std::ostringstream name;
        name << "support." << c.shape.name() << ".lambda=" << c.lambda
             << " (cells=" << rep.support_cells << ")";
        CheckResult cr = make_check(name.str(), rep.worst, 0.0);
        cr.pass = rep.pass && rep.support_cells > 0;
        out.push_back(cr);
    }

    // width halving when lambda doubles
    const double b = 2.0, eps = 0.5, h = 0.01;
    const GridSpec spec = square_grid(-3.0, 3.0, 601);
    const OracleShape shape = OracleShape::four_point(b, eps);
    const double l1 = 9.0, l2 = 18.0;
    MamResult r1 = shape_mam(shape, spec, l1);
    MamResult r2 = shape_mam(shape, spec, l2);
    const double w1 = slab_width_x(r1, 1.0, std::pow((1.0 + l1) * 1.5 * h, 2));
    const double w2 = slab_width_x(r2, 1.0, std::pow((1.0 + l2) * 1.5 * h, 2));
    out.push_back(make_check("support.width_formula.lambda=9",
                             std::abs(w1 - 2.0 * b / (1.0 + l1)), 5.0 * h));
    out.push_back(make_check("support.width_formula.lambda=18",
                             std::abs(w2 - 2.0 * b / (1.0 + l2)), 5.0 * h));
    out.push_back(make_check("support.width_halving", std::abs(w2 - 0.5 * w1), 5.0 * h));
    return out;
}

// Criterion 9: Hausdorff stability on seeded jitter pairs and the sampled
// parallel-lines model.
std::vector<CheckResult> check_hausdorff_stability(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const GridSpec spec = square_grid(-2.0, 2.0, 161);
    const int npairs = opt.quick ? 10 : 100;

    for (double lambda : {0.5, 2.0, 8.0}) {
        double worst_lower = -std::numeric_limits<double>::infinity();
        double worst_mam = -std::numeric_limits<double>::infinity();
        bool all = true;
        for (int s = 0; s < npairs; ++s) {
            std::mt19937_64 rng(opt.seed * 1000003ull + s);
            PointSet2 k = random_points(rng, 12, -1.0, 1.0);
            PerturbationSpec ps;
            ps.mode = PerturbationSpec::Mode::UniformJitter;
            ps.magnitude = 0.05;
            ps.seed = opt.seed * 7919ull + s;
            PointSet2 l = perturb(k, ps);
            StabilityReport rep = stability_bound_check(k, l, lambda, spec);
            worst_lower = std::max(worst_lower, rep.worst_lower_gap - rep.slack_lower);
            worst_mam = std::max(worst_mam, rep.worst_mam_gap - rep.slack_mam);
            all = all && rep.pass;
        }
        std::ostringstream name;
        name << "stability.jitter.lambda=" << lambda << " (" << npairs << " pairs)";
        CheckResult c = make_check(name.str(), std::max(worst_lower, worst_mam), 0.0);
        c.pass = all;
        out.push_back(c);
    }

    // sampled parallel lines: x = +-b, points at odd multiples of c = eps*b
    const double b = 1.0, lambda = 2.0, h = 5e-3;
    const double ylim = 1.7;
    const GridSpec pspec{-2.0, -1.8, h, 801, 721};
    auto lattice = [&](double eps) {
        std::vector<Point2> pts;
        const double c = eps * b;
        for (int i = 0;; ++i) {
            const double y = (2 * i + 1) * c;
            if (y > ylim) break;
            pts.push_back({b, y});
            pts.push_back({b, -y});
            pts.push_back({-b, y});
            pts.push_back({-b, -y});
        }
        return PointSet2(std::move(pts));
    };
    // exact squared distance to the two reference segments
    ScalarField2 ref_dist2(pspec, 0.0);
    for (int j = 0; j < pspec.ny; ++j)
        for (int i = 0; i < pspec.nx; ++i) {
            const Point2 p = pspec.world(i, j);
            const double dy = std::max(0.0, std::abs(p.y) - ylim);
            const double dl = (p.x + b) * (p.x + b) + dy * dy;
            const double dr = (p.x - b) * (p.x - b) + dy * dy;
            ref_dist2.at(i, j) = std::min(dl, dr);
        }
    MamParams pp;
    pp.lambda = lambda;
    MamResult ref = mam_from_dist2(ref_dist2, pp);
    std::vector<Point2> ref_pts;
    for (double y = -ylim; y <= ylim + 1e-12; y += 0.005) {
        ref_pts.push_back({b, y});
        ref_pts.push_back({-b, y});
    }
    const PointSet2 ref_set{std::vector<Point2>(ref_pts)};

    const double threshold = 0.5 * b * b;
    long prev_symdiff = -1;
    bool stabilized = true;
    bool plateau_used = false;
    BinaryMask2 prev_mask, final_mask;
    bool bounds_ok = true;
    std::vector<double> peaks;
    for (double eps : {0.4, 0.2, 0.1}) {
        PointSet2 ke = lattice(eps);
        MamResult rs = mam_from_dist2(edt_points(ke, pspec), pp);
        const double mu = hausdorff_distance(ref_set, ke);
        double worst_gap = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < pspec.ny; ++j)
            for (int i = 0; i < pspec.nx; ++i) {
                if (!ref.trusted.get(i, j) || !rs.trusted.get(i, j)) continue;
                const double diff = std::abs(ref.m_field.at(i, j) - rs.m_field.at(i, j));
                const double d = std::sqrt(std::max(0.0, ref.dist2.at(i, j)));
                const double bound =
                    mu * (1.0 + lambda) * ((d + mu) * (d + mu) + 2.0 * d + 2.0 * mu + 1.0);
                worst_gap = std::max(worst_gap, diff - bound);
            }
        bounds_ok = bounds_ok &&
                    worst_gap <= 10.0 * h * (1.0 + lambda) * (1.0 + lambda);

        // minor-branch peak along y = 0 beyond the main slab
        const int j0 = pspec.nearest_j(0.0);
        double peak = 0.0;
        for (int i = 0; i < pspec.nx; ++i) {
            const double x = std::abs(pspec.world(i, j0).x);
            if (x < 0.45 || x > 0.75) continue;
            if (!rs.trusted.get(i, j0)) continue;
            peak = std::max(peak, rs.m_field.at(i, j0));
        }
        peaks.push_back(peak / (eps * eps * b * b));

        BinaryMask2 mask = suplevel_mask(rs.m_field, threshold);
        for (std::size_t bix = 0; bix < mask.bits.size(); ++bix)
            mask.bits[bix] = mask.bits[bix] && rs.trusted.bits[bix];
        if (prev_mask.bits.size() == mask.bits.size()) {
            long symdiff = 0;
            for (std::size_t bix = 0; bix < mask.bits.size(); ++bix)
                symdiff += mask.bits[bix] != prev_mask.bits[bix];
            if (prev_symdiff >= 0 && symdiff > prev_symdiff) {
                if (plateau_used)
                    stabilized = false;
                else
                    plateau_used = true;
            }
            prev_symdiff = symdiff;
        }
        prev_mask = mask;
        final_mask = std::move(mask);
    }
    CheckResult cb = make_check("stability.lines.bounds", bounds_ok ? 0.0 : 1.0, 0.0);
    cb.pass = bounds_ok;
    out.push_back(cb);
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        std::ostringstream name;
        name << "stability.lines.minor_peak_ratio[" << i << "]";
        CheckResult c;
        c.name = name.str();
        c.measured = peaks[i];
        c.bound = 2.0;
        c.pass = peaks[i] >= 0.5 && peaks[i] <= 2.0;
        out.push_back(c);
    }
    CheckResult cs = make_check("stability.lines.mask_stabilized", stabilized ? 0.0 : 1.0, 0.0);
    cs.pass = stabilized;
    out.push_back(cs);
    double mask_extent = 0.0;
    std::size_t mask_cells = 0;
    for (int j = 0; j < pspec.ny; ++j)
        for (int i = 0; i < pspec.nx; ++i)
            if (final_mask.get(i, j)) {
                ++mask_cells;
                mask_extent = std::max(mask_extent, std::abs(pspec.world(i, j).x));
            }
    CheckResult ce = make_check("stability.lines.final_mask_is_midline", mask_extent,
                                b / (1.0 + lambda) + 5.0 * h);
    ce.pass = ce.pass && mask_cells > 0;
    out.push_back(ce);
    return out;
}

// Criterion 10: convergence of the map toward the landscape map over
// increasing lambda, plus the proof-step upper bound.
std::vector<CheckResult> check_limit_probe(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const double h = 5e-3;
    const GridSpec spec = square_grid(-2.5, 2.5, 1001);
    const std::vector<double> lambdas = {4.0, 16.0, 64.0};
    const int nsets = opt.quick ? 3 : 10;
    const int nprobes = opt.quick ? 5 : 20;
    const double mono_tol = 5.0 * h * (1.0 + lambdas.back());

    double worst_mono = -std::numeric_limits<double>::infinity();
    double worst_bound = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < nsets; ++s) {
        std::mt19937_64 rng(opt.seed * 40503ull + s);
        PointSet2 k = random_points(rng, 5, -0.8, 0.8);
        ScalarField2 dist2 = edt_points(k, spec);
        std::vector<MamResult> results;
        for (double lam : lambdas) {
            MamParams p;
            p.lambda = lam;
            results.push_back(mam_from_dist2(dist2, p));
        }
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        int taken = 0;
        int guard = 0;
        while (taken < nprobes && guard < 10000) {
            ++guard;
            const Point2 x{u(rng), u(rng)};
            const int i = spec.nearest_i(x.x), j = spec.nearest_j(x.y);
            bool ok = true;
            for (const auto& r : results) ok = ok && r.trusted.get(i, j);
            if (!ok) continue;
            const double d2 = results[0].dist2.at(i, j);
            if (d2 < 1e-6) continue;
            ++taken;
            const double minf = landscape_map(k, spec.world(i, j), 1e-9);
            std::vector<double> errs;
            for (std::size_t li = 0; li < lambdas.size(); ++li) {
                const double m = results[li].m_field.at(i, j);
                errs.push_back(std::abs(m - minf));
                const double step = results[li].dist2.at(i, j) - results[li].lower.at(i, j);
                const double bound =
                    d2 / (1.0 + lambdas[li]) + 5.0 * h * (1.0 + lambdas[li]);
                worst_bound = std::max(worst_bound, step - bound);
            }
            bool plateau_used = false;
            for (std::size_t li = 1; li < errs.size(); ++li) {
                const double rise = errs[li] - errs[li - 1];
                if (rise > mono_tol) {
                    if (plateau_used) worst_mono = std::max(worst_mono, rise);
                    plateau_used = true;
                }
            }
        }
    }
    out.push_back(make_check("limit.monotone_nonincreasing", std::max(worst_mono, 0.0), 0.0));
    out.push_back(make_check("limit.proof_step_bound", worst_bound, 0.0));
    return out;
}

// Criterion 11: opening performance and thread scaling on a 1024^2 field.
std::vector<CheckResult> check_performance() {
    std::vector<CheckResult> out;
    const int n = 1024;
    GridSpec spec{0.0, 0.0, 1.0 / n, n, n};
    ScalarField2 f(spec, 0.0);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : f.values) v = u(rng);

    auto time_opening = [&](int threads) {
        double best = std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            ScalarField2 o = lower_transform_opening(f, 2.0, threads);
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
            if (o.values[0] > 1e30) throw std::runtime_error("unreachable");
        }
        return best;
    };
    const double t1 = time_opening(1);
    const double t4 = time_opening(4);
    out.push_back(make_check("perf.single_thread_seconds", t1, 2.0));
    CheckResult scal;
    scal.name = "perf.four_thread_speedup (hw_threads=" +
                std::to_string(std::thread::hardware_concurrency()) + ")";
    scal.measured = t1 / t4;
    scal.bound = 2.5;
    scal.pass = scal.measured >= 2.5;
    out.push_back(scal);
    return out;
}

// Oracle self-consistency: direct map branches, seam continuity, the
// circle-subset/four-point identity, and a numeric cross-check per shape.
std::vector<CheckResult> check_oracle_consistency(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const std::vector<double> lambdas = {0.5, 1.0, 4.0};

    // direct map branches
    {
        double worst = 0.0;
        const OracleShape tp = OracleShape::two_point(1.0);
        const OracleShape fp = OracleShape::four_point(2.0, 0.5);
        for (double lam : lambdas)
            for (double x = -2.5; x <= 2.5; x += 0.11)
                for (double y = -2.5; y <= 2.5; y += 0.13) {
                    const Point2 p{x, y};
                    worst = std::max(worst, std::abs(oracle_eval(tp, lam, p).mam -
                                                     two_point_mam_direct(1.0, lam, p)));
                    worst = std::max(worst, std::abs(oracle_eval(fp, lam, p).mam -
                                                     four_point_mam_direct(2.0, 0.5, lam, p)));
                }
        out.push_back(make_check("oracle.direct_map_branches", worst, 1e-12));
    }

    // circle-subset specializes to four-point
    {
        const double b = 2.0, eps = 0.5, c = eps * b;
        const double r0 = std::hypot(b, c);
        const OracleShape fp = OracleShape::four_point(b, eps);
        const OracleShape cs =
            OracleShape::circle_subset(r0, {{b, c}, {b, -c}, {-b, c}, {-b, -c}});
        double worst = 0.0;
        for (double lam : lambdas)
            for (double x = -2.5; x <= 2.5; x += 0.17)
                for (double y = -2.5; y <= 2.5; y += 0.19) {
                    const OracleValues a = oracle_eval(fp, lam, {x, y});
                    const OracleValues b2 = oracle_eval(cs, lam, {x, y});
                    worst = std::max({worst, std::abs(a.dist2 - b2.dist2),
                                      std::abs(a.lower - b2.lower), std::abs(a.mam - b2.mam)});
                }
        out.push_back(make_check("oracle.circle_subset_vs_four_point", worst, 1e-12));
    }

    // seam continuity: +-1e-9 across every branch seam
    {
        double worst = 0.0;
        const double step = 1e-9;
        auto probe = [&](const OracleShape& s, double lam, Point2 p) {
            for (const Point2 d : {Point2{step, 0.0}, Point2{0.0, step}}) {
                OracleValues a, b;
                try {
                    a = oracle_eval(s, lam, p - d);
                    b = oracle_eval(s, lam, p + d);
                } catch (const BranchGapError&) {
                    continue;
                }
                worst = std::max({worst, std::abs(a.dist2 - b.dist2),
                                  std::abs(a.lower - b.lower)});
            }
        };
        for (double lam : lambdas) {
            const double s1 = 1.0 / (1.0 + lam);
            for (double t = -2.0; t <= 2.0; t += 0.23) {
                probe(OracleShape::two_point(1.0), lam, {s1, t});
                probe(OracleShape::two_point(1.0), lam, {-s1, t});
                probe(OracleShape::interval_complement(), lam, {s1, t});
                probe(OracleShape::interval_complement(), lam, {1.0, t});
                const double ang = 0.4 + t;
                probe(OracleShape::ball_complement(1.5), lam,
                      {1.5 * s1 * std::cos(ang), 1.5 * s1 * std::sin(ang)});
                probe(OracleShape::ball_complement(1.5), lam,
                      {1.5 * std::cos(ang), 1.5 * std::sin(ang)});
                probe(OracleShape::four_point(2.0, 0.5), lam, {2.0 * s1, t});
                probe(OracleShape::four_point(2.0, 0.5), lam, {t, s1});
                // strip seams: corner fans, the cap diamond, wall lines
                const double r = 1.0;
                probe(OracleShape::strip(r), lam, {t, r * s1});
                probe(OracleShape::strip(r), lam, {t, r});
                if (t <= 0.0 && t >= -r) {
                    probe(OracleShape::strip(r), lam, {t, -r * s1 - t});
                    probe(OracleShape::strip(r), lam, {t, t + r * s1});
                }
                probe(OracleShape::strip(r), lam, {0.0, t});
                probe(OracleShape::strip(r), lam, {-r, t});
                probe(OracleShape::rectangle(1.2), lam, {0.0, t});
                probe(OracleShape::rectangle(1.2), lam, {t, 1.2 * s1});
                // oval seams: cap circles and wall lines
                const double R = 1.2;
                const double ang2 = 1.8 + t;
                probe(OracleShape::oval(R), lam,
                      {-R / 2.0 + R * s1 * std::cos(ang2), R * s1 * std::sin(ang2)});
                probe(OracleShape::oval(R), lam, {t, R * s1});
                probe(OracleShape::oval(R), lam, {R / 2.0, t});
                // staircase seams
                const double c = 1.0;
                if (t >= 0.0 && t <= c) {
                    probe(OracleShape::staircase(c), lam, {t, t * lam / (1.0 + lam)});
                    probe(OracleShape::staircase(c), lam, {t * lam / (1.0 + lam), t});
                    const double cap = (1.0 + 2.0 * lam) * c / (1.0 + lam);
                    probe(OracleShape::staircase(c), lam, {cap / 2.0 + t / 2.0,
                                                           cap / 2.0 - t / 2.0});
                }
                if (t >= 0.0) {
                    probe(OracleShape::staircase(c), lam, {t, t + c / (1.0 + lam)});
                    probe(OracleShape::staircase(c), lam, {t, t + c});
                    probe(OracleShape::staircase(c), lam, {t + c, t});
                }
            }
        }
        out.push_back(make_check("oracle.seam_continuity", worst, 1e-6));
    }

    // numeric cross-check of every shape
    const int n = opt.quick ? 81 : 161;
    for (const auto& shape : corpus_shapes()) {
        const double lambda = shape.tag == OracleShape::Tag::Staircase ? 9.0 : 2.0;
        const GridSpec spec = corpus_grid(shape, n);
        MamResult r = shape_mam(shape, spec, lambda);
        const double sup = sup_err_vs_oracle(r, shape, lambda);
        std::ostringstream name;
        name << "oracle.numeric_cross_check." << shape.name();
        out.push_back(make_check(name.str(), sup,
                                 5.0 * spec.spacing * (1.0 + lambda) * (1.0 + lambda)));
    }

    // spot landscape values
    {
        double worst = std::abs(oracle_minf(OracleShape::staircase(1.0), {0.5, 0.5}) - 0.125);
        worst = std::max(worst,
                         std::abs(oracle_minf(OracleShape::four_point(2.0, 0.5), {0.0, 0.0}) -
                                  5.0));
        worst = std::max(
            worst, std::abs(oracle_minf(OracleShape::two_point(1.0), {0.0, 0.7}) - 1.0));
        out.push_back(make_check("oracle.landscape_spot_values", worst, 1e-12));
    }
    return out;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = opt.seed;
    auto append = [&](std::vector<CheckResult> v) {
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    };
    if (suite == "oracles") {
        append(check_oracle_consistency(opt));
        append(check_two_point_exactness());
        append(check_interval_sharpness());
        append(check_four_point_heights());
        append(check_staircase_plateau());
    } else if (suite == "backends") {
        append(check_backend_equivalence(opt));
    } else if (suite == "bounds") {
        append(check_universal_bounds(opt));
        append(check_gradient_bounds(opt));
        append(check_support_containment());
        append(check_limit_probe(opt));
    } else if (suite == "stability") {
        append(check_hausdorff_stability(opt));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

}  // namespace medax
