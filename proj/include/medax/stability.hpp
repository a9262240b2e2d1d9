#ifndef MEDAX_STABILITY_HPP
#define MEDAX_STABILITY_HPP

#include <cstdint>
#include <functional>

#include "medax/medial_axis_map.hpp"
#include "medax/oracles.hpp"

namespace medax {

/// Hausdorff distance between finite point sets, exact by brute force.
double hausdorff_distance(const PointSet2& a, const PointSet2& b);

struct PerturbationSpec {
    enum class Mode { UniformJitter, Subsample, StaircaseQuantize };
    Mode mode = Mode::UniformJitter;
    double magnitude = 0.0;   // jitter radius / quantization step c
    double fraction = 1.0;    // Subsample only, in (0, 1]
    std::uint64_t seed = 0;

    void validate() const;
};

PointSet2 perturb(const PointSet2& k, const PerturbationSpec& spec);

/// Open or closed polyline chain used as a boundary parameterization.
struct Chain {
    std::vector<Point2> vertices;
    bool closed = true;
};

/// Finite sample of the chains with Hausdorff distance to the boundary
/// below eps, verified internally against a 10x denser reference sample.
PointSet2 epsilon_sample(const std::vector<Chain>& chains, double eps, std::uint64_t seed);
PointSet2 epsilon_sample(const OracleShape& shape, double eps, std::uint64_t seed);

struct StabilityReport {
    double mu = 0.0;              // measured Hausdorff distance
    double worst_lower_gap = 0.0; // max |dC^l| - bound over trusted cells
    double worst_mam_gap = 0.0;   // max |dM| - bound over trusted cells
    Point2 worst_lower_at{};
    Point2 worst_mam_at{};
    double slack_lower = 0.0;
    double slack_mam = 0.0;
    std::size_t cells_checked = 0;
    bool pass = false;
};

/// Checks the Hausdorff-stability bounds between the maps of two sets at
/// every trusted grid sample.
StabilityReport stability_bound_check(const PointSet2& k, const PointSet2& l, double lambda,
                                      const GridSpec& spec);

struct SampleProbeStep {
    double eps = 0.0;
    double mu = 0.0;
    double sup_diff = 0.0;        // sup |M(ref) - M(sample)| over trusted cells
    double worst_gap = 0.0;       // sup_diff against the pointwise bound
    std::size_t mask_cells = 0;   // suplevel mask population at the threshold
    long symdiff_prev = -1;       // symmetric difference vs previous step
    bool bound_pass = false;
};

struct SampleProbeReport {
    std::uint64_t seed = 0;
    std::vector<SampleProbeStep> steps;
    BinaryMask2 final_mask;
    bool bounds_pass = false;
    bool stabilized = false;  // symmetric differences nonincreasing (one plateau allowed)
};

/// For a decreasing eps list, compares the map of each eps-sample against
/// the map of the reference set, tracks the pointwise stability bound and
/// the stabilization of the thresholded suplevel mask.
SampleProbeReport sample_convergence_probe(const PointSet2& reference,
                                           const std::function<PointSet2(double)>& sampler,
                                           const std::vector<double>& eps_list, double lambda,
                                           double threshold, const GridSpec& spec,
                                           std::uint64_t seed = 0);

}  // namespace medax

#endif
