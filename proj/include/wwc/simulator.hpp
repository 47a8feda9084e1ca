#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wwc/angles.hpp"
#include "wwc/detector.hpp"
#include "wwc/geometry.hpp"

namespace wwc {

struct LaneBand {
    double y_min = 0.0;
    double y_max = 0.0;
};

/// Synthetic-scenario knobs. All dimensions are pixels unless a name says
/// otherwise; rates are vehicles per minute.
struct ScenarioConfig {
    double duration = 1200.0;      // seconds
    double fov_length = 40.0;      // meters across the view
    double px_per_meter = 12.0;
    LaneBand right_lane{60.0, 140.0};
    LaneBand wrong_lane{170.0, 250.0};
    double o_right = 0.0;          // right-way heading, radians in image frame

    double arrival_rate_right = 27.0;
    double arrival_rate_wrong = 3.0;
    /// Per-second AR(1) persistence of the right-way arrival intensity;
    /// 0 degrades to a plain Poisson process.
    double arrival_burstiness = 0.9;
    double speed_mean = 4.0;       // m/s
    double speed_sigma = 0.8;

    double miss_rate = 0.1;              // per box per frame
    double false_positive_rate = 0.2;    // expected spurious boxes per frame
    double bbox_jitter = 4.0;            // px; center shift and size wobble
    double oracle_noise = 0.3;           // rad
    double oracle_flip_rate = 0.1;

    double vehicle_length_m = 2.0;
    double vehicle_height_px = 22.0;

    std::uint64_t seed = 1;
};

void validate(const ScenarioConfig& cfg);

/// One constant-velocity crossing of the field of view.
struct Trajectory {
    int id = 0;
    Direction direction = Direction::RightWay;
    double entry_time = 0.0;   // seconds
    double speed_px = 0.0;     // px/s along the heading
    double entry_x = 0.0;      // px, FOV edge the vehicle enters from
    double lane_y = 0.0;       // px, box-center row at entry
    CyclicAngle heading;
    double length_px = 0.0;
    double height_px = 0.0;

    Point center_at(double t) const;
};

struct MinuteCounts {
    int minute = 0;
    int n_right = 0;
    int n_wrong = 0;
};

struct GroundTruth {
    int n_right = 0;
    int n_wrong = 0;
    std::optional<double> true_ratio;  // empty when no vehicle was generated
    std::vector<MinuteCounts> per_minute;
};

struct Scenario {
    ScenarioConfig config;
    std::vector<Trajectory> vehicles;
    GroundTruth truth;

    double fov_px() const { return config.fov_length * config.px_per_meter; }
};

/// Samples arrivals (AR(1)-modulated Poisson for right-way, plain Poisson for
/// wrong-way), speeds, and lanes, and tallies the exact ground truth. Output
/// is a pure function of the config, including its seed.
Scenario generate_scenario(const ScenarioConfig& cfg);

/// Detections for a single frame at time t: jittered boxes of vehicles inside
/// the view, minus misses, plus false positives. Deterministic per (seed, t).
std::vector<BoundingBox> render_frame(const Scenario& scenario, double t);

/// Frame pairs at t_k = k * t_gap for every t_k < duration.
/// Requires t_gap > intra_pair_dt > 0.
std::vector<FramePairObservation> render_sparse(const Scenario& scenario, double t_gap,
                                                double intra_pair_dt);

struct DenseFrame {
    std::int64_t frame_index = 0;
    double t = 0.0;
    std::vector<BoundingBox> detections;
};

/// Single frames at every frame_dt, for the dense-tracking baseline.
std::vector<DenseFrame> render_dense(const Scenario& scenario, double frame_dt);

/// Stand-in for an appearance model: returns the true heading of the nearest
/// trajectory plus Gaussian noise, replaced by a uniform angle with the
/// configured flip probability; boxes matching no trajectory get uniform
/// angles. Stateless and deterministic per (seed, frame time, box).
class SimulatedOracle : public OrientationOracle {
public:
    explicit SimulatedOracle(Scenario scenario);

    CyclicAngle orient(double frame_time, const BoundingBox& box) const override;

private:
    Scenario scenario_;
    double gate_px_;
};

std::unique_ptr<OrientationOracle> noisy_oracle(const Scenario& scenario);

}  // namespace wwc
