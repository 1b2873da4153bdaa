#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zolo/zolotarev.hpp"

namespace zolo::harness {

struct ExperimentConfig {
    std::string example_name = "1a";
    int n_per_set = 512;
    zolotarev::Method method = zolotarev::Method::loewner;
    std::optional<Eigen::Index> order;
    std::optional<double> tolerance;
    int lawson_iterations = 200;
    double damping = 0.95;
    bool sign_mode = true;
    std::string output_path;  // empty = do not write
    int grid_resolution = 0;  // 0 = no contour grid
};

struct SweepRow {
    Eigen::Index order = 0;
    std::string method;
    double sigma = 0.0;
    double tau = 0.0;
    double elapsed_seconds = 0.0;
    std::string error;  // empty on success
};

// Full pipeline: make_example -> solve_z4 -> z4_to_z3 -> coefficients,
// poles/zeros, optional contour grid. Writes the JSON report (and the grid
// CSV next to it) when output_path is set. Timing fields aside, re-running
// the same config yields an identical numeric payload.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

// One row per (order, method); per-row failures are recorded and the sweep
// continues.
std::vector<SweepRow> sweep_orders(const ExperimentConfig& base,
                                   const std::vector<Eigen::Index>& orders,
                                   const std::vector<zolotarev::Method>& methods);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Uniform grid over the box; values log10|h3| clamped to [-30, +5].
// Header row "re,im,log10_abs_h3".
std::string contour_grid_csv(const zolotarev::RationalFunction& h3,
                             const domains::BoundingBox& box, int resolution);

// Shortest round-trip decimal formatting, shared by the CSV writers.
std::string format_double(double x);

} // namespace zolo::harness
