#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wwc/arma.hpp"
#include "wwc/detector.hpp"
#include "wwc/simulator.hpp"

namespace wwc {

// Record schema tags. Every output file is newline-delimited JSON: one
// run-header record followed by payload records of a single schema.
inline constexpr const char* kSchemaRunHeader = "wwc.run_header.v1";
inline constexpr const char* kSchemaFramePair = "wwc.frame_pair.v1";
inline constexpr const char* kSchemaDenseFrame = "wwc.dense_frame.v1";
inline constexpr const char* kSchemaGroundTruth = "wwc.ground_truth.v1";
inline constexpr const char* kSchemaCounts = "wwc.counts.v1";
inline constexpr const char* kSchemaRatioReport = "wwc.ratio_report.v1";
inline constexpr const char* kSchemaBenchRow = "wwc.bench_row.v1";

/// Frame pair plus the appearance-model outputs recorded per detection, in
/// detection order. Angles are absent when the producer had no oracle.
struct FramePairRecord {
    FramePairObservation obs;
    std::vector<std::optional<double>> appearance_1;
    std::vector<std::optional<double>> appearance_2;
};

struct CountRecord {
    std::int64_t sample_index = 0;
    double t = 0.0;
    double t_gap = 0.0;
    int d_r = 0;
    int d_w = 0;
};

struct RatioReportRecord {
    RatioReport report;
    std::optional<ArmaFit> right_fit;
    std::optional<ArmaFit> wrong_fit;
};

struct BenchRow {
    std::string method;
    std::uint64_t seed = 0;
    std::uint64_t frames_processed = 0;
    double wall_time_s = 0.0;
    double estimated_ratio = 0.0;
    std::optional<double> true_ratio;
    std::optional<double> abs_error;
};

nlohmann::json to_json(const BoundingBox& box, std::optional<double> appearance_angle = {});
nlohmann::json to_json(const FramePairRecord& record);
nlohmann::json to_json(const DenseFrame& frame);
nlohmann::json to_json(const GroundTruth& truth);
nlohmann::json to_json(const CountRecord& record);
nlohmann::json to_json(const ArmaFit& fit);
nlohmann::json to_json(const RatioReportRecord& record);
nlohmann::json to_json(const BenchRow& row);

FramePairRecord frame_pair_from_json(const nlohmann::json& j);
DenseFrame dense_frame_from_json(const nlohmann::json& j);
GroundTruth ground_truth_from_json(const nlohmann::json& j);
CountRecord count_from_json(const nlohmann::json& j);
ArmaFit arma_fit_from_json(const nlohmann::json& j);
RatioReportRecord ratio_report_from_json(const nlohmann::json& j);
BenchRow bench_row_from_json(const nlohmann::json& j);

/// Builds the run-header record prepended to every output file.
nlohmann::json make_run_header(const std::string& command, const nlohmann::json& config);

/// Writes header + records, one JSON object per line.
void write_record_file(const std::filesystem::path& path, const nlohmann::json& header,
                       const std::vector<nlohmann::json>& records);

struct RecordFile {
    nlohmann::json header;
    std::vector<nlohmann::json> records;
};

/// Reads an NDJSON record file, checking the header and that every payload
/// record carries expected_schema. Errors name the offending line.
RecordFile read_record_file(const std::filesystem::path& path,
                            const std::string& expected_schema);

}  // namespace wwc
