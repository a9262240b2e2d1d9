#ifndef MEDAX_GRID_HPP
#define MEDAX_GRID_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "medax/geometry.hpp"

namespace medax {

/// An operation that needs a non-empty set K received an empty one.
struct EmptySetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Uniform isotropic 2-D sampling lattice.  Sample (i, j) sits at world
/// coordinates (origin_x + i*h, origin_y + j*h); storage is row-major with
/// i the fast axis.
struct GridSpec {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double spacing = 1.0;  // h, world units per cell, > 0
    int nx = 1;
    int ny = 1;

    void validate() const {
        if (!(spacing > 0.0)) throw std::invalid_argument("GridSpec: spacing must be > 0");
        if (nx < 1 || ny < 1) throw std::invalid_argument("GridSpec: nx, ny must be >= 1");
    }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    Point2 world(int i, int j) const {
        return {origin_x + i * spacing, origin_y + j * spacing};
    }
    int nearest_i(double x) const;
    int nearest_j(double y) const;
    bool operator==(const GridSpec& o) const {
        return origin_x == o.origin_x && origin_y == o.origin_y &&
               spacing == o.spacing && nx == o.nx && ny == o.ny;
    }
};

struct ScalarField2 {
    GridSpec spec;
    std::vector<double> values;

    ScalarField2() = default;
    ScalarField2(const GridSpec& s, double fill);

    double& at(int i, int j) { return values[spec.idx(i, j)]; }
    double at(int i, int j) const { return values[spec.idx(i, j)]; }
    double at_nearest(Point2 p) const {
        return at(spec.nearest_i(p.x), spec.nearest_j(p.y));
    }
    double min_value() const;
    double max_value() const;
    void check_finite(const char* what) const;
};

struct BinaryMask2 {
    GridSpec spec;
    std::vector<std::uint8_t> bits;

    BinaryMask2() = default;
    explicit BinaryMask2(const GridSpec& s, bool fill = false);

    bool get(int i, int j) const { return bits[spec.idx(i, j)] != 0; }
    void set(int i, int j, bool v) { bits[spec.idx(i, j)] = v ? 1 : 0; }
    std::size_t count() const;
    bool any() const { return count() > 0; }
};

/// Finite planar point set; duplicates within 1e-12 are merged on
/// construction.
struct PointSet2 {
    std::vector<Point2> points;

    PointSet2() = default;
    explicit PointSet2(std::vector<Point2> pts);

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

ScalarField2 make_field(const GridSpec& spec, double fill);

/// World coordinates of every true cell.  Throws on an all-false mask.
PointSet2 mask_to_points(const BinaryMask2& mask);

/// True cells having at least one false or off-grid 4-neighbor.
BinaryMask2 boundary_cells(const BinaryMask2& mask);

/// True cells whose 4-neighbors are all true (strict interior).
BinaryMask2 interior_cells(const BinaryMask2& mask);

/// Rasterize points to the cells whose centers are nearest; all points must
/// fall within half a cell of the grid's coverage.
BinaryMask2 rasterize_points(const PointSet2& pts, const GridSpec& spec);

}  // namespace medax

#endif
