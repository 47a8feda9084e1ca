#include "wwc/records.hpp"

#include <fstream>

#include "wwc/errors.hpp"

namespace wwc {

using nlohmann::json;

namespace {

BoundingBox box_from_json(const json& j, std::optional<double>* appearance_angle) {
    BoundingBox box;
    box.x_min = j.at("x_min").get<double>();
    box.y_min = j.at("y_min").get<double>();
    box.x_max = j.at("x_max").get<double>();
    box.y_max = j.at("y_max").get<double>();
    box.confidence = j.at("confidence").get<double>();
    box.class_tag = j.at("class_tag").get<int>();
    validate(box);
    if (appearance_angle != nullptr) {
        if (j.contains("appearance_angle") && !j.at("appearance_angle").is_null()) {
            *appearance_angle = j.at("appearance_angle").get<double>();
        } else {
            *appearance_angle = std::nullopt;
        }
    }
    return box;
}

json detections_to_json(const std::vector<BoundingBox>& boxes,
                        const std::vector<std::optional<double>>* angles) {
    json arr = json::array();
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        std::optional<double> angle;
        if (angles != nullptr && i < angles->size()) {
            angle = (*angles)[i];
        }
        arr.push_back(to_json(boxes[i], angle));
    }
    return arr;
}

void detections_from_json(const json& arr, std::vector<BoundingBox>& boxes,
                          std::vector<std::optional<double>>& angles) {
    boxes.clear();
    angles.clear();
    for (const json& j : arr) {
        std::optional<double> angle;
        boxes.push_back(box_from_json(j, &angle));
        angles.push_back(angle);
    }
}

}  // namespace

json to_json(const BoundingBox& box, std::optional<double> appearance_angle) {
    json j{{"x_min", box.x_min},
           {"y_min", box.y_min},
           {"x_max", box.x_max},
           {"y_max", box.y_max},
           {"confidence", box.confidence},
           {"class_tag", box.class_tag}};
    if (appearance_angle) {
        j["appearance_angle"] = *appearance_angle;
    }
    return j;
}

json to_json(const FramePairRecord& record) {
    return json{{"schema", kSchemaFramePair},
                {"sample_index", record.obs.sample_index},
                {"t", record.obs.t},
                {"intra_pair_dt", record.obs.intra_pair_dt},
                {"detections_1", detections_to_json(record.obs.detections_1, &record.appearance_1)},
                {"detections_2", detections_to_json(record.obs.detections_2, &record.appearance_2)}};
}

FramePairRecord frame_pair_from_json(const json& j) {
    FramePairRecord record;
    record.obs.sample_index = j.at("sample_index").get<std::int64_t>();
    record.obs.t = j.at("t").get<double>();
    record.obs.intra_pair_dt = j.at("intra_pair_dt").get<double>();
    detections_from_json(j.at("detections_1"), record.obs.detections_1, record.appearance_1);
    detections_from_json(j.at("detections_2"), record.obs.detections_2, record.appearance_2);
    return record;
}

json to_json(const DenseFrame& frame) {
    return json{{"schema", kSchemaDenseFrame},
                {"frame_index", frame.frame_index},
                {"t", frame.t},
                {"detections", detections_to_json(frame.detections, nullptr)}};
}

DenseFrame dense_frame_from_json(const json& j) {
    DenseFrame frame;
    frame.frame_index = j.at("frame_index").get<std::int64_t>();
    frame.t = j.at("t").get<double>();
    std::vector<std::optional<double>> unused;
    detections_from_json(j.at("detections"), frame.detections, unused);
    return frame;
}

json to_json(const GroundTruth& truth) {
    json minutes = json::array();
    for (const MinuteCounts& m : truth.per_minute) {
        minutes.push_back(
            json{{"minute", m.minute}, {"n_right", m.n_right}, {"n_wrong", m.n_wrong}});
    }
    return json{{"schema", kSchemaGroundTruth},
                {"n_right", truth.n_right},
                {"n_wrong", truth.n_wrong},
                {"true_ratio", truth.true_ratio ? json(*truth.true_ratio) : json(nullptr)},
                {"per_minute", minutes}};
}

GroundTruth ground_truth_from_json(const json& j) {
    GroundTruth truth;
    truth.n_right = j.at("n_right").get<int>();
    truth.n_wrong = j.at("n_wrong").get<int>();
    if (!j.at("true_ratio").is_null()) {
        truth.true_ratio = j.at("true_ratio").get<double>();
    }
    for (const json& m : j.at("per_minute")) {
        truth.per_minute.push_back({m.at("minute").get<int>(), m.at("n_right").get<int>(),
                                    m.at("n_wrong").get<int>()});
    }
    return truth;
}

json to_json(const CountRecord& record) {
    return json{{"schema", kSchemaCounts},  {"sample_index", record.sample_index},
                {"t", record.t},            {"t_gap", record.t_gap},
                {"d_r", record.d_r},        {"d_w", record.d_w}};
}

CountRecord count_from_json(const json& j) {
    CountRecord record;
    record.sample_index = j.at("sample_index").get<std::int64_t>();
    record.t = j.at("t").get<double>();
    record.t_gap = j.at("t_gap").get<double>();
    record.d_r = j.at("d_r").get<int>();
    record.d_w = j.at("d_w").get<int>();
    if (record.d_r < 0 || record.d_w < 0) {
        throw DataError("count record has negative counts");
    }
    return record;
}

json to_json(const ArmaFit& fit) {
    return json{{"p", fit.p},         {"q", fit.q},          {"c", fit.c},
                {"phi", fit.phi},     {"theta", fit.theta},  {"sigma2", fit.sigma2},
                {"log_objective", fit.log_objective}};
}

ArmaFit arma_fit_from_json(const json& j) {
    ArmaFit fit;
    fit.p = j.at("p").get<int>();
    fit.q = j.at("q").get<int>();
    fit.c = j.at("c").get<double>();
    fit.phi = j.at("phi").get<double>();
    fit.theta = j.at("theta").get<double>();
    fit.sigma2 = j.at("sigma2").get<double>();
    fit.log_objective = j.at("log_objective").get<double>();
    return fit;
}

json to_json(const RatioReportRecord& record) {
    return json{{"schema", kSchemaRatioReport},
                {"ratio", record.report.ratio},
                {"sum_r", record.report.sum_r},
                {"sum_w", record.report.sum_w},
                {"negative_mass_warning", record.report.negative_mass_warning},
                {"right_fit", record.right_fit ? to_json(*record.right_fit) : json(nullptr)},
                {"wrong_fit", record.wrong_fit ? to_json(*record.wrong_fit) : json(nullptr)}};
}

RatioReportRecord ratio_report_from_json(const json& j) {
    RatioReportRecord record;
    record.report.ratio = j.at("ratio").get<double>();
    record.report.sum_r = j.at("sum_r").get<double>();
    record.report.sum_w = j.at("sum_w").get<double>();
    record.report.negative_mass_warning = j.at("negative_mass_warning").get<bool>();
    if (!j.at("right_fit").is_null()) record.right_fit = arma_fit_from_json(j.at("right_fit"));
    if (!j.at("wrong_fit").is_null()) record.wrong_fit = arma_fit_from_json(j.at("wrong_fit"));
    return record;
}

json to_json(const BenchRow& row) {
    return json{{"schema", kSchemaBenchRow},
                {"method", row.method},
                {"seed", row.seed},
                {"frames_processed", row.frames_processed},
                {"wall_time_s", row.wall_time_s},
                {"estimated_ratio", row.estimated_ratio},
                {"true_ratio", row.true_ratio ? json(*row.true_ratio) : json(nullptr)},
                {"abs_error", row.abs_error ? json(*row.abs_error) : json(nullptr)}};
}

BenchRow bench_row_from_json(const json& j) {
    BenchRow row;
    row.method = j.at("method").get<std::string>();
    row.seed = j.at("seed").get<std::uint64_t>();
    row.frames_processed = j.at("frames_processed").get<std::uint64_t>();
    row.wall_time_s = j.at("wall_time_s").get<double>();
    row.estimated_ratio = j.at("estimated_ratio").get<double>();
    if (!j.at("true_ratio").is_null()) row.true_ratio = j.at("true_ratio").get<double>();
    if (!j.at("abs_error").is_null()) row.abs_error = j.at("abs_error").get<double>();
    return row;
}

json make_run_header(const std::string& command, const json& config) {
    return json{{"schema", kSchemaRunHeader}, {"command", command}, {"config", config}};
}

void write_record_file(const std::filesystem::path& path, const json& header,
                       const std::vector<json>& records) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    out << header.dump() << '\n';
    for (const json& record : records) {
        out << record.dump() << '\n';
    }
    if (!out) {
        throw DataError("failed while writing '" + path.string() + "'");
    }
}

RecordFile read_record_file(const std::filesystem::path& path,
                            const std::string& expected_schema) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "' for reading");
    }
    RecordFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw DataError("'" + path.string() + "' line " + std::to_string(line_no) +
                            ": " + e.what());
        }
        const std::string schema = j.value("schema", "");
        if (line_no == 1) {
            if (schema != kSchemaRunHeader) {
                throw DataError("'" + path.string() + "' line 1: expected " +
                                std::string(kSchemaRunHeader) + " header, got '" + schema + "'");
            }
            file.header = std::move(j);
            continue;
        }
        if (schema != expected_schema) {
            throw DataError("'" + path.string() + "' line " + std::to_string(line_no) +
                            ": expected schema '" + expected_schema + "', got '" + schema + "'");
        }
        file.records.push_back(std::move(j));
    }
    if (file.header.is_null()) {
        throw DataError("'" + path.string() + "': empty record file");
    }
    return file;
}

}  // namespace wwc
