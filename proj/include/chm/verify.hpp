#pragma once

#include "chm/analysis.hpp"
#include "chm/sampler.hpp"

namespace chm {

struct VerifyConfig {
    std::uint64_t seed = 0;
    int order = kDefaultOrder;
    int grid_points = 100;     ///< evaluation points per sample for the bound sweep
    int angle_steps = 90;      ///< coarse resolution of the direction search
    double envelope_scale = 1.0;
    int coefficient_max = 12;
};

struct SampleResult {
    std::string label;
    bool certified = false;
    bool expected_member = false;
    bool bounds_pass = false;
    double bounds_worst_margin = 0.0;
    bool coefficients_pass = false;
    double coefficients_worst_margin = 0.0;
    double css2_residual = 0.0;
    double css2_alpha = 0.0;
    double css2_beta = 0.0;
    bool sum_bound_pass = false;
    bool rigidity_consistent = true;
    bool pass = false;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<SampleResult> samples;
    int certified_count = 0;
    bool catalog_expectations_met = false;  ///< cert matches expected_member per entry
    bool pass = false;
};

/// Sweeps the sample catalog: membership certification, envelope bounds on a
/// deterministic grid, coefficient bounds, direction search, sum bound, and a
/// rigidity consistency probe. Bounds and coefficients are checked only for
/// certified members; negative controls must fail certification.
VerifyReport run_verification(const VerifyConfig& cfg = {});

}  // namespace chm
