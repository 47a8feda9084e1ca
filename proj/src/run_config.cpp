#include "wwc/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wwc/errors.hpp"

namespace wwc {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value) {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) {
        throw std::invalid_argument("trailing characters");
    }
    return parsed;
}

int parse_int(const std::string& value) {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) {
        throw std::invalid_argument("trailing characters");
    }
    return parsed;
}

std::uint64_t parse_u64(const std::string& value) {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != value.size()) {
        throw std::invalid_argument("trailing characters");
    }
    return parsed;
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw std::invalid_argument("expected true/false");
}

std::pair<double, double> parse_pair(const std::string& value) {
    const auto comma = value.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("expected two comma-separated values");
    }
    return {parse_double(trim(value.substr(0, comma))),
            parse_double(trim(value.substr(comma + 1)))};
}

ArmaOrders parse_orders(const std::string& value) {
    const auto [p, q] = parse_pair(value);
    ArmaOrders orders{static_cast<int>(p), static_cast<int>(q)};
    if (orders.p != p || orders.q != q || orders.p < 0 || orders.p > 1 || orders.q < 0 ||
        orders.q > 1) {
        throw std::invalid_argument("orders must be 0 or 1");
    }
    return orders;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "iou_max") cfg.detector.iou_max = parse_double(value);
    else if (key == "iou_min") cfg.detector.iou_min = parse_double(value);
    else if (key == "div_max") cfg.detector.div_max = parse_double(value);
    else if (key == "classify_threshold") cfg.detector.classify_threshold = parse_double(value);
    else if (key == "o_right") {
        cfg.detector.o_right = CyclicAngle(parse_double(value));
        cfg.scenario.o_right = parse_double(value);
    }
    else if (key == "y_axis_down") cfg.detector.y_axis_down = parse_bool(value);
    else if (key == "t_gap") cfg.t_gap = parse_double(value);
    else if (key == "intra_pair_dt") cfg.intra_pair_dt = parse_double(value);
    else if (key == "orders_right") cfg.orders_right = parse_orders(value);
    else if (key == "orders_wrong") cfg.orders_wrong = parse_orders(value);
    else if (key == "duration") cfg.scenario.duration = parse_double(value);
    else if (key == "fov_length") cfg.scenario.fov_length = parse_double(value);
    else if (key == "px_per_meter") cfg.scenario.px_per_meter = parse_double(value);
    else if (key == "right_lane") {
        const auto [lo, hi] = parse_pair(value);
        cfg.scenario.right_lane = {lo, hi};
    }
    else if (key == "wrong_lane") {
        const auto [lo, hi] = parse_pair(value);
        cfg.scenario.wrong_lane = {lo, hi};
    }
    else if (key == "arrival_rate_right") cfg.scenario.arrival_rate_right = parse_double(value);
    else if (key == "arrival_rate_wrong") cfg.scenario.arrival_rate_wrong = parse_double(value);
    else if (key == "arrival_burstiness") cfg.scenario.arrival_burstiness = parse_double(value);
    else if (key == "speed_mean") cfg.scenario.speed_mean = parse_double(value);
    else if (key == "speed_sigma") cfg.scenario.speed_sigma = parse_double(value);
    else if (key == "miss_rate") cfg.scenario.miss_rate = parse_double(value);
    else if (key == "false_positive_rate") cfg.scenario.false_positive_rate = parse_double(value);
    else if (key == "bbox_jitter") cfg.scenario.bbox_jitter = parse_double(value);
    else if (key == "oracle_noise") cfg.scenario.oracle_noise = parse_double(value);
    else if (key == "oracle_flip_rate") cfg.scenario.oracle_flip_rate = parse_double(value);
    else if (key == "vehicle_length") cfg.scenario.vehicle_length_m = parse_double(value);
    else if (key == "vehicle_height_px") cfg.scenario.vehicle_height_px = parse_double(value);
    else if (key == "seed") cfg.scenario.seed = parse_u64(value);
    else if (key == "frame_dt") cfg.frame_dt = parse_double(value);
    else if (key == "tracker_iou_min") cfg.tracker_iou_min = parse_double(value);
    else if (key == "tracker_max_age") cfg.tracker_max_age = parse_int(value);
    else if (key == "min_displacement") cfg.min_displacement = parse_double(value);
    else if (key == "bench_seeds") cfg.bench_seeds = parse_int(value);
    else throw std::invalid_argument("unknown key");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) {
            line = line.substr(0, comment);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto equals = line.find('=');
        if (equals == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, equals));
        const std::string value = trim(line.substr(equals + 1));
        try {
            apply_key(cfg, key, value);
        } catch (const std::exception& e) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": key '" + key +
                              "': " + e.what());
        }
    }
    return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.string());
}

json config_to_json(const RunConfig& cfg) {
    return json{{"iou_max", cfg.detector.iou_max},
                {"iou_min", cfg.detector.iou_min},
                {"div_max", cfg.detector.div_max},
                {"classify_threshold", cfg.detector.classify_threshold},
                {"o_right", cfg.detector.o_right.value()},
                {"y_axis_down", cfg.detector.y_axis_down},
                {"t_gap", cfg.t_gap},
                {"intra_pair_dt", cfg.intra_pair_dt},
                {"orders_right", {cfg.orders_right.p, cfg.orders_right.q}},
                {"orders_wrong", {cfg.orders_wrong.p, cfg.orders_wrong.q}},
                {"duration", cfg.scenario.duration},
                {"fov_length", cfg.scenario.fov_length},
                {"px_per_meter", cfg.scenario.px_per_meter},
                {"right_lane", {cfg.scenario.right_lane.y_min, cfg.scenario.right_lane.y_max}},
                {"wrong_lane", {cfg.scenario.wrong_lane.y_min, cfg.scenario.wrong_lane.y_max}},
                {"arrival_rate_right", cfg.scenario.arrival_rate_right},
                {"arrival_rate_wrong", cfg.scenario.arrival_rate_wrong},
                {"arrival_burstiness", cfg.scenario.arrival_burstiness},
                {"speed_mean", cfg.scenario.speed_mean},
                {"speed_sigma", cfg.scenario.speed_sigma},
                {"miss_rate", cfg.scenario.miss_rate},
                {"false_positive_rate", cfg.scenario.false_positive_rate},
                {"bbox_jitter", cfg.scenario.bbox_jitter},
                {"oracle_noise", cfg.scenario.oracle_noise},
                {"oracle_flip_rate", cfg.scenario.oracle_flip_rate},
                {"vehicle_length", cfg.scenario.vehicle_length_m},
                {"vehicle_height_px", cfg.scenario.vehicle_height_px},
                {"seed", cfg.scenario.seed},
                {"frame_dt", cfg.frame_dt},
                {"tracker_iou_min", cfg.tracker_iou_min},
                {"tracker_max_age", cfg.tracker_max_age},
                {"min_displacement", cfg.min_displacement},
                {"bench_seeds", cfg.bench_seeds}};
}

}  // namespace wwc
