#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wwc/arma.hpp"
#include "wwc/detector.hpp"
#include "wwc/simulator.hpp"

namespace wwc {

/// Everything a run needs, with defaults matching the reference values the
/// detector and estimator are specified with. A flat key-value config file
/// overrides individual fields.
struct RunConfig {
    DetectorConfig detector;
    double t_gap = 2.0;           // seconds between sparse samples
    double intra_pair_dt = 0.2;   // seconds between the two frames of a sample
    ArmaOrders orders_right{1, 1};
    ArmaOrders orders_wrong{1, 0};
    ScenarioConfig scenario;
    double frame_dt = 0.17;       // dense baseline frame spacing
    double tracker_iou_min = 0.05;
    int tracker_max_age = 3;
    double min_displacement = 10.0;  // px; tracks below this are clutter
    int bench_seeds = 1;
};

/// Parses `key = value` lines ('#' starts a comment; every key optional).
/// Unknown keys or bad values raise ConfigError naming the line.
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");
RunConfig parse_config_file(const std::filesystem::path& path);

/// Flat JSON view of the resolved config, embedded in output file headers.
/// Keys match the config-file key set.
nlohmann::json config_to_json(const RunConfig& cfg);

}  // namespace wwc
