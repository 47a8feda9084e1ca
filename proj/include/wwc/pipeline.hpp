#pragma once

#include <string>
#include <vector>

#include "wwc/records.hpp"
#include "wwc/run_config.hpp"
#include "wwc/simulator.hpp"
#include "wwc/tracker.hpp"

namespace wwc {

struct SparseRunResult {
    CountSeriesPair series;
    EstimateResult estimate;
    std::uint64_t frames_processed = 0;  // two frames per sample
    double wall_time_s = 0.0;            // detector + estimator, rendering excluded
};

/// Renders the sparse stream of a scenario and runs it through the detector
/// and the temporal estimator. use_ensemble = false gives the detection-only
/// ablation (motion orientation classified directly).
SparseRunResult run_sparse_pipeline(const Scenario& scenario, const RunConfig& cfg,
                                    bool use_ensemble);

struct TrackerRunResult {
    RatioReport report;
    std::uint64_t frames_processed = 0;
    double wall_time_s = 0.0;
    std::size_t track_count = 0;
};

/// Renders the dense stream and runs the tracking baseline over it.
TrackerRunResult run_tracker_baseline(const Scenario& scenario, const RunConfig& cfg);

/// Runs all three methods on `seeds` seeded variants of the configured
/// scenario (seed, seed+1, ...). Methods: "wwc", "detection_only", "tracker".
std::vector<BenchRow> run_bench(const RunConfig& cfg, int seeds);

/// Fixed-width human-readable view of bench rows plus per-method means.
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace wwc
