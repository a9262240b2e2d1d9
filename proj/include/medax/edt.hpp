#ifndef MEDAX_EDT_HPP
#define MEDAX_EDT_HPP

#include "medax/grid.hpp"

namespace medax {

/// Quadratic structuring-function transform selector.  Erode with lambda=0
/// degenerates to the global infimum; Dilate requires lambda > 0.
struct QuadTransformKind {
    enum class Op { Erode, Dilate };
    Op op = Op::Erode;
    double lambda = 1.0;

    void validate() const {
        if (op == Op::Erode ? lambda < 0.0 : !(lambda > 0.0))
            throw std::invalid_argument("QuadTransformKind: invalid lambda for op");
    }
};

/// Field plus the cells whose values may be influenced by the missing
/// exterior of the grid (an optimum clamped at a line end during one of the
/// separable passes, or a border cell).  `border_margin` is the smallest m
/// such that every suspect cell lies within m cells of the grid border.
struct TransformDiag {
    ScalarField2 field;
    BinaryMask2 suspect;
    int border_margin = 0;
};

/// Exact squared Euclidean distance to a finite point set, sampled on a
/// grid.  Brute force for up to 64 points; larger sets are rasterized to
/// cell centers first (accuracy then O(h)).
ScalarField2 edt_points(const PointSet2& k, const GridSpec& spec);

/// Exact squared distance (world units) from each cell center to the
/// nearest true cell center.  Two separable passes; O(N) per axis.
ScalarField2 edt_mask(const BinaryMask2& mask);

/// Quadratic erosion: out(x) = min over grid samples y of f(y) + lambda*|x-y|^2.
ScalarField2 quad_erode(const ScalarField2& f, double lambda, int threads = 1);

/// Quadratic dilation: out(x) = max over grid samples y of g(y) - lambda*|x-y|^2.
ScalarField2 quad_dilate(const ScalarField2& g, double lambda, int threads = 1);

ScalarField2 quad_transform(const ScalarField2& f, const QuadTransformKind& kind,
                            int threads = 1);

/// Erosion followed by dilation (the quadratic opening), with suspect-cell
/// tracking through all four separable passes.
TransformDiag quad_open_diag(const ScalarField2& f, double lambda, int threads = 1);

}  // namespace medax

#endif
