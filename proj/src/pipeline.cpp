#include "wwc/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "wwc/errors.hpp"

namespace wwc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SparseRunResult run_sparse_pipeline(const Scenario& scenario, const RunConfig& cfg,
                                    bool use_ensemble) {
    const std::vector<FramePairObservation> stream =
        render_sparse(scenario, cfg.t_gap, cfg.intra_pair_dt);
    const SimulatedOracle oracle(scenario);

    DetectorConfig detector = cfg.detector;
    detector.use_ensemble = use_ensemble;

    SparseRunResult result;
    result.frames_processed = 2 * stream.size();
    const auto start = Clock::now();
    result.series = process_stream(stream, oracle, detector);
    result.series.right.t_gap = cfg.t_gap;
    result.series.wrong.t_gap = cfg.t_gap;
    result.estimate = estimate_from_counts(result.series.right, result.series.wrong,
                                           cfg.orders_right, cfg.orders_wrong);
    result.wall_time_s = seconds_since(start);
    return result;
}

TrackerRunResult run_tracker_baseline(const Scenario& scenario, const RunConfig& cfg) {
    const std::vector<DenseFrame> frames = render_dense(scenario, cfg.frame_dt);

    TrackerRunResult result;
    result.frames_processed = frames.size();
    const auto start = Clock::now();
    const std::vector<Track> tracks =
        track_stream(frames, cfg.tracker_iou_min, cfg.tracker_max_age);
    result.track_count = tracks.size();
    result.report = tracks_to_ratio(tracks, cfg.detector.o_right, cfg.min_displacement,
                                    cfg.detector.classify_threshold, cfg.detector.y_axis_down);
    result.wall_time_s = seconds_since(start);
    return result;
}

std::vector<BenchRow> run_bench(const RunConfig& cfg, int seeds) {
    if (seeds < 1) {
        throw InvalidParameterError("run_bench: need at least one seed");
    }
    std::vector<BenchRow> rows;
    for (int s = 0; s < seeds; ++s) {
        ScenarioConfig scenario_cfg = cfg.scenario;
        scenario_cfg.seed = cfg.scenario.seed + static_cast<std::uint64_t>(s);
        const Scenario scenario = generate_scenario(scenario_cfg);
        const std::optional<double> truth = scenario.truth.true_ratio;

        const auto make_row = [&](const std::string& method, std::uint64_t frames,
                                  double wall_s, double ratio) {
            BenchRow row;
            row.method = method;
            row.seed = scenario_cfg.seed;
            row.frames_processed = frames;
            row.wall_time_s = wall_s;
            row.estimated_ratio = ratio;
            row.true_ratio = truth;
            if (truth) {
                row.abs_error = std::abs(ratio - *truth);
            }
            return row;
        };

        const SparseRunResult full = run_sparse_pipeline(scenario, cfg, true);
        rows.push_back(make_row("wwc", full.frames_processed, full.wall_time_s,
                                full.estimate.report.ratio));

        const SparseRunResult det_only = run_sparse_pipeline(scenario, cfg, false);
        rows.push_back(make_row("detection_only", det_only.frames_processed,
                                det_only.wall_time_s, det_only.estimate.report.ratio));

        const TrackerRunResult tracker = run_tracker_baseline(scenario, cfg);
        rows.push_back(make_row("tracker", tracker.frames_processed, tracker.wall_time_s,
                                tracker.report.ratio));
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(16) << "method" << std::right << std::setw(12) << "seed"
        << std::setw(10) << "frames" << std::setw(12) << "time_s" << std::setw(10) << "ratio"
        << std::setw(12) << "abs_error" << '\n';
    std::map<std::string, std::pair<double, int>> error_sums;
    for (const BenchRow& row : rows) {
        out << std::left << std::setw(16) << row.method << std::right << std::setw(12)
            << row.seed << std::setw(10) << row.frames_processed << std::setw(12) << std::fixed
            << std::setprecision(4) << row.wall_time_s << std::setw(10) << std::setprecision(4)
            << row.estimated_ratio;
        if (row.abs_error) {
            out << std::setw(12) << std::setprecision(4) << *row.abs_error;
            auto& [sum, count] = error_sums[row.method];
            sum += *row.abs_error;
            ++count;
        } else {
            out << std::setw(12) << "n/a";
        }
        out << '\n';
    }
    out << '\n';
    for (const auto& [method, sum_count] : error_sums) {
        out << std::left << std::setw(16) << method << " mean abs error "
            << std::setprecision(4) << sum_count.first / sum_count.second << '\n';
    }
    return out.str();
}

}  // namespace wwc
