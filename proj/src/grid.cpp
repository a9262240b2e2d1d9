#include "medax/grid.hpp"

#include <algorithm>
#include <cmath>

namespace medax {

int GridSpec::nearest_i(double x) const {
    const int i = static_cast<int>(std::lround((x - origin_x) / spacing));
    return std::clamp(i, 0, nx - 1);
}

int GridSpec::nearest_j(double y) const {
    const int j = static_cast<int>(std::lround((y - origin_y) / spacing));
    return std::clamp(j, 0, ny - 1);
}

ScalarField2::ScalarField2(const GridSpec& s, double fill) : spec(s) {
    spec.validate();
    if (!std::isfinite(fill)) throw std::invalid_argument("ScalarField2: fill must be finite");
    values.assign(spec.size(), fill);
}

double ScalarField2::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double ScalarField2::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

void ScalarField2::check_finite(const char* what) const {
    for (double v : values) {
        if (!std::isfinite(v)) throw std::runtime_error(std::string(what) + ": non-finite sample");
    }
}

BinaryMask2::BinaryMask2(const GridSpec& s, bool fill) : spec(s) {
    spec.validate();
    bits.assign(spec.size(), fill ? 1 : 0);
}

std::size_t BinaryMask2::count() const {
    std::size_t n = 0;
    for (auto b : bits) n += (b != 0);
    return n;
}

PointSet2::PointSet2(std::vector<Point2> pts) {
    constexpr double kDedupTol = 1e-12;
    points.reserve(pts.size());
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : points) {
            if (std::abs(p.x - q.x) <= kDedupTol && std::abs(p.y - q.y) <= kDedupTol) {
                dup = true;
                break;
            }
        }
        if (!dup) points.push_back(p);
    }
}

ScalarField2 make_field(const GridSpec& spec, double fill) {
    return ScalarField2(spec, fill);
}

PointSet2 mask_to_points(const BinaryMask2& mask) {
    std::vector<Point2> pts;
    for (int j = 0; j < mask.spec.ny; ++j)
        for (int i = 0; i < mask.spec.nx; ++i)
            if (mask.get(i, j)) pts.push_back(mask.spec.world(i, j));
    if (pts.empty()) throw EmptySetError("mask_to_points: empty set K");
    return PointSet2(std::move(pts));
}

BinaryMask2 boundary_cells(const BinaryMask2& mask) {
    BinaryMask2 out(mask.spec, false);
    const int nx = mask.spec.nx, ny = mask.spec.ny;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!mask.get(i, j)) continue;
            const bool edge = i == 0 || i == nx - 1 || j == 0 || j == ny - 1 ||
                              !mask.get(i - 1, j) || !mask.get(i + 1, j) ||
                              !mask.get(i, j - 1) || !mask.get(i, j + 1);
            if (edge) out.set(i, j, true);
        }
    }
    return out;
}

BinaryMask2 interior_cells(const BinaryMask2& mask) {
    BinaryMask2 bd = boundary_cells(mask);
    BinaryMask2 out(mask.spec, false);
    for (std::size_t k = 0; k < mask.bits.size(); ++k)
        out.bits[k] = mask.bits[k] && !bd.bits[k];
    return out;
}

BinaryMask2 rasterize_points(const PointSet2& pts, const GridSpec& spec) {
    spec.validate();
    BinaryMask2 out(spec, false);
    const double h = spec.spacing;
    for (const auto& p : pts.points) {
        const double fi = (p.x - spec.origin_x) / h;
        const double fj = (p.y - spec.origin_y) / h;
        const int i = static_cast<int>(std::lround(fi));
        const int j = static_cast<int>(std::lround(fj));
        if (i < 0 || i >= spec.nx || j < 0 || j >= spec.ny)
            throw std::invalid_argument("rasterize_points: point outside grid");
        out.set(i, j, true);
    }
    return out;
}

}  // namespace medax
