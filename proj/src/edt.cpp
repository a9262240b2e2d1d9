#include "medax/edt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace medax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of the parabolas p_j(t) = f[j] + w*(t - j)^2 evaluated at
// t = 0..n-1 (Felzenszwalb-Huttenlocher).  Entries with f[j] = +inf are
// skipped; caller guarantees at least one finite entry.  Writes the
// envelope to out and the supporting sample index to argmin when non-null.
void envelope_1d(const double* f, int n, double w, double* out, int* argmin) {
    thread_local std::vector<int> v;
    thread_local std::vector<double> z;
    v.resize(n);
    z.resize(n + 1);

    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] == kInf) continue;
        double s = 0.0;
        while (k >= 0) {
            const int p = v[k];
            s = (f[q] - f[p] + w * (static_cast<double>(q) * q - static_cast<double>(p) * p)) /
                (2.0 * w * (q - p));
            if (s > z[k]) break;
            --k;
        }
        if (k < 0) {
            k = 0;
            v[0] = q;
            z[0] = -kInf;
        } else {
            ++k;
            v[k] = q;
            z[k] = s;
        }
        z[k + 1] = kInf;
    }

    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (z[j + 1] < q) ++j;
        const int p = v[j];
        out[q] = f[p] + w * static_cast<double>(q - p) * (q - p);
        if (argmin) argmin[q] = p;
    }
}

template <class Body>
void parallel_lines(int count, int threads, Body body) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 2 * threads) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

// One erosion pass along an axis.  axis 0: along rows (fast index), axis 1:
// along columns.  When a suspect mask is given, a cell becomes suspect if
// its supporting sample is suspect or sits at either end of the line.
void erode_pass(ScalarField2& f, int axis, double w, int threads, BinaryMask2* suspect) {
    const int nx = f.spec.nx, ny = f.spec.ny;
    const int nline = axis == 0 ? ny : nx;
    const int len = axis == 0 ? nx : ny;

    auto body = [&f, axis, w, len, suspect](int lo, int hi) {
        std::vector<double> in(len), out(len);
        std::vector<int> arg(len);
        std::vector<std::uint8_t> s(len);
        for (int line = lo; line < hi; ++line) {
            for (int t = 0; t < len; ++t) {
                const std::size_t id = axis == 0 ? f.spec.idx(t, line) : f.spec.idx(line, t);
                in[t] = f.values[id];
                if (suspect) s[t] = suspect->bits[id];
            }
            envelope_1d(in.data(), len, w, out.data(), arg.data());
            for (int t = 0; t < len; ++t) {
                const std::size_t id = axis == 0 ? f.spec.idx(t, line) : f.spec.idx(line, t);
                f.values[id] = out[t];
                if (suspect) {
                    const int a = arg[t];
                    suspect->bits[id] = (s[a] || a == 0 || a == len - 1) ? 1 : 0;
                }
            }
        }
    };
    (void)nx;
    (void)ny;
    parallel_lines(nline, threads, body);
}

void erode_inplace(ScalarField2& f, double lambda, int threads, BinaryMask2* suspect) {
    const double w = lambda * f.spec.spacing * f.spec.spacing;
    erode_pass(f, 0, w, threads, suspect);
    erode_pass(f, 1, w, threads, suspect);
}

int margin_from_suspect(const BinaryMask2& s) {
    int margin = 0;
    const int nx = s.spec.nx, ny = s.spec.ny;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (s.get(i, j)) {
                const int d = std::min(std::min(i, nx - 1 - i), std::min(j, ny - 1 - j));
                margin = std::max(margin, d + 1);
            }
    return margin;
}

}  // namespace

ScalarField2 edt_points(const PointSet2& k, const GridSpec& spec) {
    spec.validate();
    if (k.empty()) throw EmptySetError("edt_points: empty set K");
    if (k.size() <= 64) {
        ScalarField2 out(spec, 0.0);
        for (int j = 0; j < spec.ny; ++j) {
            for (int i = 0; i < spec.nx; ++i) {
                const Point2 x = spec.world(i, j);
                double best = kInf;
                for (const auto& p : k.points) best = std::min(best, dist2_point(x, p));
                out.at(i, j) = best;
            }
        }
        return out;
    }
    return edt_mask(rasterize_points(k, spec));
}

ScalarField2 edt_mask(const BinaryMask2& mask) {
    mask.spec.validate();
    if (!mask.any()) throw EmptySetError("edt_mask: empty set K");
    const int nx = mask.spec.nx, ny = mask.spec.ny;
    const double h = mask.spec.spacing;
    ScalarField2 out(mask.spec, 0.0);

    // pass 1: squared in-row distance (cells) to the nearest true cell
    for (int j = 0; j < ny; ++j) {
        double d = kInf;
        for (int i = 0; i < nx; ++i) {
            d = mask.get(i, j) ? 0.0 : d + 1.0;
            out.at(i, j) = d;
        }
        d = kInf;
        for (int i = nx - 1; i >= 0; --i) {
            d = mask.get(i, j) ? 0.0 : d + 1.0;
            out.at(i, j) = std::min(out.at(i, j), d);
        }
        for (int i = 0; i < nx; ++i) {
            double& v = out.at(i, j);
            v = std::isfinite(v) ? v * v * h * h : kInf;
        }
    }
    // pass 2: parabola envelope down each column
    erode_pass(out, 1, h * h, 1, nullptr);
    return out;
}

ScalarField2 quad_erode(const ScalarField2& f, double lambda, int threads) {
    if (!(lambda > 0.0)) throw std::invalid_argument("quad_erode: lambda must be > 0");
    f.check_finite("quad_erode");
    ScalarField2 out = f;
    erode_inplace(out, lambda, threads, nullptr);
    return out;
}

ScalarField2 quad_dilate(const ScalarField2& g, double lambda, int threads) {
    if (!(lambda > 0.0)) throw std::invalid_argument("quad_dilate: lambda must be > 0");
    g.check_finite("quad_dilate");
    ScalarField2 out = g;
    for (auto& v : out.values) v = -v;
    erode_inplace(out, lambda, threads, nullptr);
    for (auto& v : out.values) v = -v;
    return out;
}

ScalarField2 quad_transform(const ScalarField2& f, const QuadTransformKind& kind, int threads) {
    kind.validate();
    if (kind.op == QuadTransformKind::Op::Erode) {
        if (kind.lambda == 0.0) return ScalarField2(f.spec, f.min_value());
        return quad_erode(f, kind.lambda, threads);
    }
    return quad_dilate(f, kind.lambda, threads);
}

TransformDiag quad_open_diag(const ScalarField2& f, double lambda, int threads) {
    if (!(lambda > 0.0)) throw std::invalid_argument("quad_open_diag: lambda must be > 0");
    f.check_finite("quad_open_diag");
    TransformDiag diag{f, BinaryMask2(f.spec, false), 0};
    erode_inplace(diag.field, lambda, threads, &diag.suspect);
    for (auto& v : diag.field.values) v = -v;
    erode_inplace(diag.field, lambda, threads, &diag.suspect);
    for (auto& v : diag.field.values) v = -v;
    diag.border_margin = margin_from_suspect(diag.suspect);
    return diag;
}

}  // namespace medax
