#ifndef MEDAX_VERIFY_HPP
#define MEDAX_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace medax {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;

    double slack() const { return bound - measured; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    double iter_tol_override = 0.0;  // >0 forces the iterative backend tolerance
    bool quick = false;              // smaller grids / fewer repetitions
};

/// Named acceptance checks.  Each returns one result per sub-check, bound
/// included, pass decided at the stated tolerance.
std::vector<CheckResult> check_two_point_exactness();
std::vector<CheckResult> check_interval_sharpness();
std::vector<CheckResult> check_four_point_heights();
std::vector<CheckResult> check_staircase_plateau();
std::vector<CheckResult> check_backend_equivalence(const VerifyOptions& opt);
std::vector<CheckResult> check_universal_bounds(const VerifyOptions& opt);
std::vector<CheckResult> check_gradient_bounds(const VerifyOptions& opt);
std::vector<CheckResult> check_support_containment();
std::vector<CheckResult> check_hausdorff_stability(const VerifyOptions& opt);
std::vector<CheckResult> check_limit_probe(const VerifyOptions& opt);
std::vector<CheckResult> check_performance();

/// Closed-form self-consistency of the oracles: directly coded map
/// branches, seam continuity, circle-subset/four-point agreement, and a
/// numeric cross-check of every shape on a coarse grid.
std::vector<CheckResult> check_oracle_consistency(const VerifyOptions& opt);

/// Suites wired to the CLI: oracles, backends, bounds, stability.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace medax

#endif
