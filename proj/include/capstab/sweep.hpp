#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capstab/estimates.hpp"
#include "capstab/gh.hpp"

namespace capstab {

/// Configuration of the near-extremal stability sweep (flat JSON file).
struct SweepConfig {
    double c = 1.0;
    std::vector<double> etas;  // positive, decreasing
    int grid = 128;
    std::vector<double> lambdas{1.0, 2.0};
    std::vector<double> ps{1.0, 1.5};
    int sample_size = 256;
    std::string out_dir;
    double tol_scale = 1.0;
    unsigned seed = 0;

    void validate() const;
};

SweepConfig sweep_config_from_json(const std::string& text);
std::string sweep_config_to_json(const SweepConfig& cfg);

/// One row of the sweep: the quantities the stability theorem chains
/// together, measured for u_eta against the model cap.
struct SweepRow {
    double eta = 0.0;
    double epsilon = 0.0;
    double boundary_length = 0.0;
    double area = 0.0;
    double inradius = 0.0;
    double inradius_bound = 0.0;
    double slack = 0.0;
    double robin_margin = 0.0;
    double ordering_margin = 0.0;
    double flux = 0.0;
    double l1_laplacian = 0.0;
    std::vector<double> prop_norms;  // per (lambda, p) pair, lambdas major
    double gh_upper = 0.0;
    double gh_lower = 0.0;
    double gh_distortion = 0.0;
    double solve_seconds = 0.0;
    double row_seconds = 0.0;
    std::string error;  // non-empty when the solver failed; row is partial
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
    MetricSample model_sample;  // aligned reference sample of rho_c
    std::vector<int> sample_indices;
};

SweepResult run_stability_sweep(const SweepConfig& cfg);

/// Versioned CSV emission; the trailing *_seconds columns are the only ones
/// that vary between runs.
std::string sweep_to_csv(const SweepResult& result);

inline constexpr const char* kSweepCsvVersion = "capstab-sweep-v1";

}  // namespace capstab
