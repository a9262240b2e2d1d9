#include "medax/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace medax {

double hausdorff_distance(const PointSet2& a, const PointSet2& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: empty input set");
    auto directed = [](const PointSet2& from, const PointSet2& to) {
        double worst = 0.0;
        for (const auto& p : from.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to.points) best = std::min(best, dist2_point(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::sqrt(std::max(directed(a, b), directed(b, a)));
}

void PerturbationSpec::validate() const {
    if (magnitude < 0.0) throw std::invalid_argument("PerturbationSpec: magnitude must be >= 0");
    if (mode == Mode::Subsample && !(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("PerturbationSpec: fraction must be in (0, 1]");
}

PointSet2 perturb(const PointSet2& k, const PerturbationSpec& spec) {
    spec.validate();
    if (k.empty()) throw EmptySetError("perturb: empty set K");
    std::mt19937_64 rng(spec.seed);
    std::vector<Point2> out;
    switch (spec.mode) {
        case PerturbationSpec::Mode::UniformJitter: {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (const auto& p : k.points) {
                const double r = spec.magnitude * std::sqrt(unit(rng));
                const double a = 2.0 * std::acos(-1.0) * unit(rng);
                out.push_back({p.x + r * std::cos(a), p.y + r * std::sin(a)});
            }
            break;
        }
        case PerturbationSpec::Mode::Subsample: {
            std::vector<std::size_t> idx(k.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            const std::size_t keep =
                std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(
                                             spec.fraction * static_cast<double>(k.size()))));
            for (std::size_t i = 0; i < keep; ++i) out.push_back(k.points[idx[i]]);
            break;
        }
        case PerturbationSpec::Mode::StaircaseQuantize: {
            if (!(spec.magnitude > 0.0))
                throw std::invalid_argument("StaircaseQuantize needs magnitude > 0");
            for (const auto& p : k.points)
                out.push_back({std::round(p.x / spec.magnitude) * spec.magnitude,
                               std::round(p.y / spec.magnitude) * spec.magnitude});
            break;
        }
    }
    return PointSet2(std::move(out));
}

namespace {

// Points spaced ds apart along the chain, starting at the given phase.
std::vector<Point2> walk_chain(const Chain& chain, double ds, double phase) {
    std::vector<Point2> out;
    const auto& v = chain.vertices;
    if (v.size() < 2) {
        out = v;
        return out;
    }
    const std::size_t nseg = chain.closed ? v.size() : v.size() - 1;
    double carry = phase;
    for (std::size_t s = 0; s < nseg; ++s) {
        const Point2 a = v[s];
        const Point2 b = v[(s + 1) % v.size()];
        const double len = norm(b - a);
        if (len == 0.0) continue;
        double t = carry;
        while (t < len) {
            out.push_back(a + (t / len) * (b - a));
            t += ds;
        }
        carry = t - len;
    }
    if (!chain.closed) out.push_back(v.back());
    return out;
}

double chains_length(const std::vector<Chain>& chains) {
    double total = 0.0;
    for (const auto& c : chains) {
        const auto& v = c.vertices;
        if (v.size() < 2) continue;
        const std::size_t nseg = c.closed ? v.size() : v.size() - 1;
        for (std::size_t s = 0; s < nseg; ++s) total += norm(v[(s + 1) % v.size()] - v[s]);
    }
    return total;
}

}  // namespace

PointSet2 epsilon_sample(const std::vector<Chain>& chains, double eps, std::uint64_t seed) {
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon_sample: eps must be > 0");
    const double total = chains_length(chains);
    if (total == 0.0) throw std::invalid_argument("epsilon_sample: zero-length boundary");

    std::mt19937_64 rng(seed);
    const double ds = std::min(eps, total);
    std::uniform_real_distribution<double> phase(0.0, ds);

    std::vector<Point2> sample, reference;
    for (const auto& c : chains) {
        const double ph = phase(rng);
        auto s = walk_chain(c, ds, ph);
        sample.insert(sample.end(), s.begin(), s.end());
        auto ref = walk_chain(c, ds / 10.0, 0.0);
        reference.insert(reference.end(), ref.begin(), ref.end());
    }
    PointSet2 s(std::move(sample));
    PointSet2 ref(std::move(reference));
    if (s.empty()) throw std::invalid_argument("epsilon_sample: empty sample");
    const double hd = hausdorff_distance(s, ref);
    if (hd >= eps)
        throw std::runtime_error("epsilon_sample: criterion not achievable at the reference "
                                 "density (dist " + std::to_string(hd) + " vs eps " +
                                 std::to_string(eps) + ")");
    return s;
}

PointSet2 epsilon_sample(const OracleShape& shape, double eps, std::uint64_t seed) {
    const auto poly = shape_boundary_polygon(shape, eps / 4.0);
    return epsilon_sample({Chain{poly, true}}, eps, seed);
}

StabilityReport stability_bound_check(const PointSet2& k, const PointSet2& l, double lambda,
                                      const GridSpec& spec) {
    if (k.empty() || l.empty()) throw EmptySetError("stability_bound_check: empty set");
    if (!(lambda > 0.0)) throw std::invalid_argument("stability_bound_check: lambda must be > 0");

    MamParams p;
    p.lambda = lambda;
    MamResult rk = mam_field(k, spec, p);
    MamResult rl = mam_field(l, spec, p);

    StabilityReport rep;
    rep.mu = hausdorff_distance(k, l);
    const double h = spec.spacing;
    rep.slack_lower = 10.0 * h * (1.0 + lambda);
    rep.slack_mam = 10.0 * h * (1.0 + lambda) * (1.0 + lambda);
    rep.worst_lower_gap = -std::numeric_limits<double>::infinity();
    rep.worst_mam_gap = -std::numeric_limits<double>::infinity();

    const double mu = rep.mu;
    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            if (!rk.trusted.get(i, j) || !rl.trusted.get(i, j)) continue;
            ++rep.cells_checked;
            const double dk = std::sqrt(std::max(0.0, rk.dist2.at(i, j)));
            const double bound_lower = mu * ((dk + mu) * (dk + mu) + 1.0 + mu);
            const double bound_mam =
                mu * (1.0 + lambda) * ((dk + mu) * (dk + mu) + 2.0 * dk + 2.0 * mu + 1.0);
            const double dl = std::abs(rk.lower.at(i, j) - rl.lower.at(i, j)) - bound_lower;
            const double dm = std::abs(rk.m_field.at(i, j) - rl.m_field.at(i, j)) - bound_mam;
            if (dl > rep.worst_lower_gap) {
                rep.worst_lower_gap = dl;
                rep.worst_lower_at = spec.world(i, j);
            }
            if (dm > rep.worst_mam_gap) {
                rep.worst_mam_gap = dm;
                rep.worst_mam_at = spec.world(i, j);
            }
        }
    }
    rep.pass = rep.cells_checked > 0 && rep.worst_lower_gap <= rep.slack_lower &&
               rep.worst_mam_gap <= rep.slack_mam;
    return rep;
}

SampleProbeReport sample_convergence_probe(const PointSet2& reference,
                                           const std::function<PointSet2(double)>& sampler,
                                           const std::vector<double>& eps_list, double lambda,
                                           double threshold, const GridSpec& spec,
                                           std::uint64_t seed) {
    if (reference.empty()) throw EmptySetError("sample_convergence_probe: empty reference");
    MamParams p;
    p.lambda = lambda;
    MamResult ref = mam_field(reference, spec, p);

    SampleProbeReport rep;
    rep.seed = seed;
    rep.bounds_pass = true;
    BinaryMask2 prev_mask;
    bool have_prev = false;
    long prev_symdiff = -1;
    bool stabilized = true;
    bool plateau_used = false;

    for (double eps : eps_list) {
        PointSet2 ke = sampler(eps);
        MamResult rs = mam_field(ke, spec, p);
        SampleProbeStep step;
        step.eps = eps;
        step.mu = hausdorff_distance(reference, ke);
        step.worst_gap = -std::numeric_limits<double>::infinity();
        const double mu = step.mu;
        for (int j = 0; j < spec.ny; ++j) {
            for (int i = 0; i < spec.nx; ++i) {
                if (!ref.trusted.get(i, j) || !rs.trusted.get(i, j)) continue;
                const double diff = std::abs(ref.m_field.at(i, j) - rs.m_field.at(i, j));
                step.sup_diff = std::max(step.sup_diff, diff);
                const double dk = std::sqrt(std::max(0.0, ref.dist2.at(i, j)));
                const double bound =
                    mu * (1.0 + lambda) * ((dk + mu) * (dk + mu) + 2.0 * dk + 2.0 * mu + 1.0);
                step.worst_gap = std::max(step.worst_gap, diff - bound);
            }
        }
        step.bound_pass =
            step.worst_gap <= 10.0 * spec.spacing * (1.0 + lambda) * (1.0 + lambda);
        rep.bounds_pass = rep.bounds_pass && step.bound_pass;

        BinaryMask2 mask = suplevel_mask(rs.m_field, threshold);
        if (have_prev) {
            long symdiff = 0;
            for (std::size_t b = 0; b < mask.bits.size(); ++b)
                symdiff += mask.bits[b] != prev_mask.bits[b];
            step.symdiff_prev = symdiff;
            if (prev_symdiff >= 0 && symdiff > prev_symdiff) {
                if (plateau_used)
                    stabilized = false;
                else
                    plateau_used = true;
            }
            prev_symdiff = symdiff;
        }
        prev_mask = mask;
        have_prev = true;
        step.mask_cells = mask.count();
        rep.steps.push_back(step);
        rep.final_mask = std::move(mask);
    }
    rep.stabilized = stabilized;
    return rep;
}

}  // namespace medax
