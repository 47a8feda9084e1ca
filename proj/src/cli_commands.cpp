#include "wwc/cli_commands.hpp"

#include <bit>
#include <cmath>
#include <filesystem>
#include <map>
#include <tuple>

#include "wwc/errors.hpp"
#include "wwc/pipeline.hpp"
#include "wwc/records.hpp"
#include "wwc/run_config.hpp"

namespace wwc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

RunConfig load_config(const std::string& config_path) {
    return config_path.empty() ? RunConfig{} : parse_config_file(config_path);
}

/// Oracle backed by the appearance angles recorded in a sparse-pairs file,
/// keyed by frame time and exact box centroid.
class RecordedOracle : public OrientationOracle {
public:
    void add(double frame_time, const BoundingBox& box, double angle) {
        angles_[key(frame_time, box)] = angle;
    }

    CyclicAngle orient(double frame_time, const BoundingBox& box) const override {
        const auto it = angles_.find(key(frame_time, box));
        if (it == angles_.end()) {
            throw DataError("no recorded appearance angle for a detection at t=" +
                            std::to_string(frame_time));
        }
        return CyclicAngle(it->second);
    }

private:
    using Key = std::tuple<std::int64_t, std::uint64_t, std::uint64_t>;

    static Key key(double frame_time, const BoundingBox& box) {
        const Point c = centroid(box);
        return {std::llround(frame_time * 1e6), std::bit_cast<std::uint64_t>(c.x),
                std::bit_cast<std::uint64_t>(c.y)};
    }

    std::map<Key, double> angles_;
};

}  // namespace

ArmaOrders parse_orders(const std::string& text) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        const std::string p_text = text.substr(0, comma);
        const std::string q_text = text.substr(comma + 1);
        if (p_text.size() == 1 && q_text.size() == 1 && (p_text[0] == '0' || p_text[0] == '1') &&
            (q_text[0] == '0' || q_text[0] == '1')) {
            return {p_text[0] - '0', q_text[0] - '0'};
        }
    }
    throw ConfigError("orders must be 'p,q' with p and q in {0, 1}, got '" + text + "'");
}

void run_simulate(const std::string& config_path, const std::string& out_dir,
                  std::optional<std::uint64_t> seed, std::ostream& log) {
    RunConfig cfg = load_config(config_path);
    if (seed) {
        cfg.scenario.seed = *seed;
    }
    const Scenario scenario = generate_scenario(cfg.scenario);
    const SimulatedOracle oracle(scenario);

    fs::create_directories(out_dir);
    const json header_cfg = config_to_json(cfg);

    write_record_file(fs::path(out_dir) / "ground_truth.ndjson",
                      make_run_header("simulate", header_cfg),
                      {to_json(scenario.truth)});

    const std::vector<FramePairObservation> stream =
        render_sparse(scenario, cfg.t_gap, cfg.intra_pair_dt);
    std::vector<json> pair_records;
    pair_records.reserve(stream.size());
    for (const FramePairObservation& obs : stream) {
        FramePairRecord record;
        record.obs = obs;
        for (const BoundingBox& box : obs.detections_1) {
            record.appearance_1.push_back(oracle.orient(obs.t, box).value());
        }
        for (const BoundingBox& box : obs.detections_2) {
            record.appearance_2.push_back(oracle.orient(obs.t + obs.intra_pair_dt, box).value());
        }
        pair_records.push_back(to_json(record));
    }
    write_record_file(fs::path(out_dir) / "sparse_pairs.ndjson",
                      make_run_header("simulate", header_cfg), pair_records);

    const std::vector<DenseFrame> frames = render_dense(scenario, cfg.frame_dt);
    std::vector<json> dense_records;
    dense_records.reserve(frames.size());
    for (const DenseFrame& frame : frames) {
        dense_records.push_back(to_json(frame));
    }
    write_record_file(fs::path(out_dir) / "dense_frames.ndjson",
                      make_run_header("simulate", header_cfg), dense_records);

    log << "simulate: " << scenario.vehicles.size() << " vehicles ("
        << scenario.truth.n_right << " right, " << scenario.truth.n_wrong << " wrong), "
        << stream.size() << " frame pairs, " << frames.size() << " dense frames -> "
        << out_dir << "\n";
}

void run_detect(const std::string& in_path, const std::string& out_path,
                std::optional<double> t_gap, std::optional<double> div_max, bool no_ensemble,
                std::ostream& log) {
    const RecordFile file = read_record_file(in_path, kSchemaFramePair);

    std::vector<FramePairObservation> stream;
    RecordedOracle oracle;
    stream.reserve(file.records.size());
    for (std::size_t i = 0; i < file.records.size(); ++i) {
        FramePairRecord record;
        try {
            record = frame_pair_from_json(file.records[i]);
        } catch (const std::exception& e) {
            throw DataError("'" + in_path + "' line " + std::to_string(i + 2) + ": " + e.what());
        }
        const double t2 = record.obs.t + record.obs.intra_pair_dt;
        for (std::size_t d = 0; d < record.obs.detections_1.size(); ++d) {
            if (record.appearance_1[d]) {
                oracle.add(record.obs.t, record.obs.detections_1[d], *record.appearance_1[d]);
            } else if (!no_ensemble) {
                throw DataError("'" + in_path + "' line " + std::to_string(i + 2) +
                                ": detection without appearance_angle; "
                                "rerun simulate or pass --no-ensemble");
            }
        }
        for (std::size_t d = 0; d < record.obs.detections_2.size(); ++d) {
            if (record.appearance_2[d]) {
                oracle.add(t2, record.obs.detections_2[d], *record.appearance_2[d]);
            } else if (!no_ensemble) {
                throw DataError("'" + in_path + "' line " + std::to_string(i + 2) +
                                ": detection without appearance_angle; "
                                "rerun simulate or pass --no-ensemble");
            }
        }
        stream.push_back(std::move(record.obs));
    }

    RunConfig cfg;
    if (div_max) {
        cfg.detector.div_max = *div_max;
    }
    cfg.detector.use_ensemble = !no_ensemble;
    const CountSeriesPair series = process_stream(stream, oracle, cfg.detector);

    double out_gap = t_gap.value_or(series.right.t_gap);
    if (t_gap) {
        cfg.t_gap = *t_gap;
    }
    std::vector<json> records;
    records.reserve(stream.size());
    for (std::size_t k = 0; k < stream.size(); ++k) {
        CountRecord record;
        record.sample_index = static_cast<std::int64_t>(k);
        record.t = stream[k].t;
        record.t_gap = out_gap;
        record.d_r = series.right.values[k];
        record.d_w = series.wrong.values[k];
        records.push_back(to_json(record));
    }
    write_record_file(out_path, make_run_header("detect", config_to_json(cfg)), records);
    log << "detect: " << stream.size() << " samples -> " << out_path << "\n";
}

void run_estimate(const std::string& in_path, const std::string& out_path,
                  std::optional<std::string> orders_right,
                  std::optional<std::string> orders_wrong, std::ostream& log) {
    const RecordFile file = read_record_file(in_path, kSchemaCounts);

    RunConfig cfg;
    if (orders_right) {
        cfg.orders_right = parse_orders(*orders_right);
    }
    if (orders_wrong) {
        cfg.orders_wrong = parse_orders(*orders_wrong);
    }

    CountSeries right{{}, 0.0, FlowLabel::RightWay};
    CountSeries wrong{{}, 0.0, FlowLabel::WrongWay};
    for (std::size_t i = 0; i < file.records.size(); ++i) {
        CountRecord record;
        try {
            record = count_from_json(file.records[i]);
        } catch (const std::exception& e) {
            throw DataError("'" + in_path + "' line " + std::to_string(i + 2) + ": " + e.what());
        }
        if (record.sample_index != static_cast<std::int64_t>(i)) {
            throw DataError("'" + in_path + "' line " + std::to_string(i + 2) +
                            ": sample indices must be contiguous from 0");
        }
        right.values.push_back(record.d_r);
        wrong.values.push_back(record.d_w);
        right.t_gap = wrong.t_gap = record.t_gap;
    }

    const EstimateResult estimate =
        estimate_from_counts(right, wrong, cfg.orders_right, cfg.orders_wrong);

    RatioReportRecord record{estimate.report, estimate.right_fit, estimate.wrong_fit};
    write_record_file(out_path, make_run_header("estimate", config_to_json(cfg)),
                      {to_json(record)});
    log << "estimate: ratio " << estimate.report.ratio << " (sum_r " << estimate.report.sum_r
        << ", sum_w " << estimate.report.sum_w << ")"
        << (estimate.report.negative_mass_warning ? " [negative mass]" : "") << " -> "
        << out_path << "\n";
}

void run_bench(const std::string& config_path, const std::string& out_path,
               std::optional<int> seeds, std::ostream& log) {
    const RunConfig cfg = load_config(config_path);
    const int n_seeds = seeds.value_or(cfg.bench_seeds);
    const std::vector<BenchRow> rows = ::wwc::run_bench(cfg, n_seeds);

    std::vector<json> records;
    records.reserve(rows.size());
    for (const BenchRow& row : rows) {
        records.push_back(to_json(row));
    }
    write_record_file(out_path, make_run_header("bench", config_to_json(cfg)), records);
    log << format_bench_table(rows);
    log << "bench: " << n_seeds << " seed(s) -> " << out_path << "\n";
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const ConfigError*>(&error) != nullptr ||
        dynamic_cast<const InvalidParameterError*>(&error) != nullptr) {
        return kExitConfig;
    }
    if (dynamic_cast<const DataError*>(&error) != nullptr ||
        dynamic_cast<const MalformedStreamError*>(&error) != nullptr) {
        return kExitData;
    }
    if (dynamic_cast<const DegenerateSeriesError*>(&error) != nullptr ||
        dynamic_cast<const InsufficientDataError*>(&error) != nullptr ||
        dynamic_cast<const UndefinedRatioError*>(&error) != nullptr ||
        dynamic_cast<const DegenerateVectorError*>(&error) != nullptr ||
        dynamic_cast<const DegenerateMeanError*>(&error) != nullptr) {
        return kExitDegenerate;
    }
    return 1;
}

}  // namespace wwc::cli
