#include "wwc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "wwc/errors.hpp"
#include "wwc/rng.hpp"

namespace wwc {

namespace {

// Substream tags; every random decision hangs off (seed, tag, ...) so that
// frames can be rendered in any order without changing the output.
constexpr std::uint64_t kStreamArrivals = 0x41525256ULL;  // "ARRV"
constexpr std::uint64_t kStreamRender = 0x464D5245ULL;    // "FMRE"
constexpr std::uint64_t kStreamOracle = 0x4F52434CULL;    // "ORCL"

constexpr double kMinSpeed = 0.5;  // m/s floor for truncated speed draws

std::uint64_t quantize_time(double t) {
    return static_cast<std::uint64_t>(std::llround(t * 1e6));
}

void check_band(const LaneBand& band, const char* name) {
    if (!(band.y_min < band.y_max)) {
        throw InvalidParameterError(std::string("scenario: ") + name +
                                    " lane band must have positive height");
    }
}

// Arrival times on [0, duration) from a Poisson process whose per-second
// intensity is rate * ((1 - b) + b * m_t), with m_t an AR(1) chain of
// exponential innovations and unit mean. b = 0 yields constant intensity.
std::vector<double> sample_arrivals(Rng& rng, double duration, double rate_per_s,
                                    double burstiness) {
    std::vector<double> times;
    double momentum = 1.0;
    for (double slot_start = 0.0; slot_start < duration; slot_start += 1.0) {
        const double slot_len = std::min(1.0, duration - slot_start);
        momentum = burstiness * momentum + (1.0 - burstiness) * rng.exponential(1.0);
        const double intensity = rate_per_s * ((1.0 - burstiness) + burstiness * momentum);
        const std::uint64_t n = rng.poisson(intensity * slot_len);
        for (std::uint64_t i = 0; i < n; ++i) {
            times.push_back(slot_start + rng.uniform() * slot_len);
        }
    }
    std::sort(times.begin(), times.end());
    return times;
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.duration > 0.0)) throw InvalidParameterError("scenario: duration must be positive");
    if (!(cfg.fov_length > 0.0) || !(cfg.px_per_meter > 0.0)) {
        throw InvalidParameterError("scenario: field of view must have positive extent");
    }
    check_band(cfg.right_lane, "right");
    check_band(cfg.wrong_lane, "wrong");
    if (cfg.arrival_rate_right < 0.0 || cfg.arrival_rate_wrong < 0.0) {
        throw InvalidParameterError("scenario: arrival rates must be non-negative");
    }
    if (!(cfg.arrival_burstiness >= 0.0 && cfg.arrival_burstiness < 1.0)) {
        throw InvalidParameterError("scenario: burstiness must lie in [0, 1)");
    }
    if (!(cfg.speed_mean > 0.0) || cfg.speed_sigma < 0.0) {
        throw InvalidParameterError("scenario: speeds must be positive");
    }
    for (double p : {cfg.miss_rate, cfg.oracle_flip_rate}) {
        if (!(p >= 0.0 && p < 1.0)) {
            throw InvalidParameterError("scenario: probabilities must lie in [0, 1)");
        }
    }
    if (cfg.false_positive_rate < 0.0 || cfg.bbox_jitter < 0.0 || cfg.oracle_noise < 0.0) {
        throw InvalidParameterError("scenario: noise magnitudes must be non-negative");
    }
    if (!(cfg.vehicle_length_m > 0.0) || !(cfg.vehicle_height_px > 0.0)) {
        throw InvalidParameterError("scenario: vehicle size must be positive");
    }
    if (std::abs(std::cos(cfg.o_right)) < 0.1) {
        throw InvalidParameterError(
            "scenario: right-way heading must have a clear horizontal component");
    }
}

Point Trajectory::center_at(double t) const {
    const double s = speed_px * (t - entry_time);
    return {entry_x + s * std::cos(heading.value()), lane_y + s * std::sin(heading.value())};
}

Scenario generate_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    Scenario scenario;
    scenario.config = cfg;

    Rng rng(mix_seed(cfg.seed, kStreamArrivals));
    const std::vector<double> arrivals_right =
        sample_arrivals(rng, cfg.duration, cfg.arrival_rate_right / 60.0, cfg.arrival_burstiness);
    const std::vector<double> arrivals_wrong =
        sample_arrivals(rng, cfg.duration, cfg.arrival_rate_wrong / 60.0, 0.0);

    const double fov_px = scenario.fov_px();
    const double base_length = cfg.vehicle_length_m * cfg.px_per_meter;
    int next_id = 0;
    const auto spawn = [&](double entry_time, Direction direction) {
        Trajectory v;
        v.id = next_id++;
        v.direction = direction;
        v.entry_time = entry_time;
        const double speed_mps = std::max(kMinSpeed, rng.normal(cfg.speed_mean, cfg.speed_sigma));
        v.speed_px = speed_mps * cfg.px_per_meter;
        const LaneBand& band = direction == Direction::RightWay ? cfg.right_lane : cfg.wrong_lane;
        v.lane_y = rng.uniform(band.y_min, band.y_max);
        const double heading = direction == Direction::RightWay
                                   ? cfg.o_right
                                   : cfg.o_right + std::numbers::pi;
        v.heading = CyclicAngle(heading);
        v.entry_x = std::cos(heading) >= 0.0 ? 0.0 : fov_px;
        const double size_factor = rng.uniform(0.85, 1.15);
        v.length_px = base_length * size_factor;
        v.height_px = cfg.vehicle_height_px * size_factor;
        scenario.vehicles.push_back(v);
    };
    for (double t : arrivals_right) spawn(t, Direction::RightWay);
    for (double t : arrivals_wrong) spawn(t, Direction::WrongWay);

    GroundTruth& truth = scenario.truth;
    truth.n_right = static_cast<int>(arrivals_right.size());
    truth.n_wrong = static_cast<int>(arrivals_wrong.size());
    if (truth.n_right + truth.n_wrong > 0) {
        truth.true_ratio = static_cast<double>(truth.n_wrong) /
                           static_cast<double>(truth.n_right + truth.n_wrong);
    }
    const int minutes = static_cast<int>(std::ceil(cfg.duration / 60.0));
    truth.per_minute.resize(minutes);
    for (int m = 0; m < minutes; ++m) truth.per_minute[m].minute = m;
    for (const Trajectory& v : scenario.vehicles) {
        const int m = std::min(minutes - 1, static_cast<int>(v.entry_time / 60.0));
        if (v.direction == Direction::RightWay) {
            ++truth.per_minute[m].n_right;
        } else {
            ++truth.per_minute[m].n_wrong;
        }
    }
    return scenario;
}

std::vector<BoundingBox> render_frame(const Scenario& scenario, double t) {
    const ScenarioConfig& cfg = scenario.config;
    const double fov_px = scenario.fov_px();
    Rng rng(mix_seed(cfg.seed, kStreamRender, quantize_time(t)));

    std::vector<BoundingBox> boxes;
    for (const Trajectory& v : scenario.vehicles) {
        if (t < v.entry_time) continue;
        Point c = v.center_at(t);
        if (c.x < 0.0 || c.x > fov_px) continue;

        // Center shift is additive jitter; size wobbles multiplicatively with
        // roughly the same pixel scale.
        c.x += rng.normal(0.0, cfg.bbox_jitter);
        c.y += rng.normal(0.0, cfg.bbox_jitter);
        const double w = v.length_px * std::exp(rng.normal(0.0, cfg.bbox_jitter / v.length_px));
        const double h = v.height_px * std::exp(rng.normal(0.0, cfg.bbox_jitter / v.height_px));
        const double confidence = rng.uniform(0.6, 1.0);
        const bool missed = rng.uniform() < cfg.miss_rate;
        if (missed) continue;

        boxes.push_back({c.x - 0.5 * w, c.y - 0.5 * h, c.x + 0.5 * w, c.y + 0.5 * h,
                         confidence, 0});
    }

    const double y_lo = std::min(cfg.right_lane.y_min, cfg.wrong_lane.y_min) - 20.0;
    const double y_hi = std::max(cfg.right_lane.y_max, cfg.wrong_lane.y_max) + 20.0;
    const double base_length = cfg.vehicle_length_m * cfg.px_per_meter;
    const std::uint64_t n_fp = rng.poisson(cfg.false_positive_rate);
    for (std::uint64_t i = 0; i < n_fp; ++i) {
        const double cx = rng.uniform(0.0, fov_px);
        const double cy = rng.uniform(y_lo, y_hi);
        const double w = base_length * rng.uniform(0.7, 1.3);
        const double h = cfg.vehicle_height_px * rng.uniform(0.7, 1.3);
        const double confidence = rng.uniform(0.3, 0.7);
        boxes.push_back({cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h,
                         confidence, 0});
    }
    return boxes;
}

std::vector<FramePairObservation> render_sparse(const Scenario& scenario, double t_gap,
                                                double intra_pair_dt) {
    if (!(t_gap > intra_pair_dt && intra_pair_dt > 0.0)) {
        throw InvalidParameterError("render_sparse: need t_gap > intra_pair_dt > 0");
    }
    std::vector<FramePairObservation> stream;
    for (std::int64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * t_gap;
        if (t >= scenario.config.duration) break;
        FramePairObservation obs;
        obs.sample_index = k;
        obs.t = t;
        obs.intra_pair_dt = intra_pair_dt;
        obs.detections_1 = render_frame(scenario, t);
        obs.detections_2 = render_frame(scenario, t + intra_pair_dt);
        stream.push_back(std::move(obs));
    }
    return stream;
}

std::vector<DenseFrame> render_dense(const Scenario& scenario, double frame_dt) {
    if (!(frame_dt > 0.0)) {
        throw InvalidParameterError("render_dense: frame_dt must be positive");
    }
    std::vector<DenseFrame> frames;
    for (std::int64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * frame_dt;
        if (t >= scenario.config.duration) break;
        frames.push_back({k, t, render_frame(scenario, t)});
    }
    return frames;
}

SimulatedOracle::SimulatedOracle(Scenario scenario) : scenario_(std::move(scenario)) {
    const ScenarioConfig& cfg = scenario_.config;
    const double base_length = cfg.vehicle_length_m * cfg.px_per_meter;
    gate_px_ = 0.5 * std::hypot(base_length, cfg.vehicle_height_px) + 3.0 * cfg.bbox_jitter;
}

CyclicAngle SimulatedOracle::orient(double frame_time, const BoundingBox& box) const {
    const ScenarioConfig& cfg = scenario_.config;
    const Point query = centroid(box);

    const Trajectory* nearest = nullptr;
    double nearest_dist = gate_px_;
    for (const Trajectory& v : scenario_.vehicles) {
        if (frame_time < v.entry_time) continue;
        const Point c = v.center_at(frame_time);
        if (c.x < -gate_px_ || c.x > scenario_.fov_px() + gate_px_) continue;
        const double dist = std::hypot(c.x - query.x, c.y - query.y);
        if (dist < nearest_dist) {
            nearest_dist = dist;
            nearest = &v;
        }
    }

    // Noise is hashed from (seed, frame time, box center) so repeated queries
    // agree and query order never matters.
    Rng rng(mix_seed(mix_seed(cfg.seed, kStreamOracle, quantize_time(frame_time)),
                     std::bit_cast<std::uint64_t>(query.x),
                     std::bit_cast<std::uint64_t>(query.y)));
    if (nearest == nullptr || rng.uniform() < cfg.oracle_flip_rate) {
        return CyclicAngle(rng.uniform(-std::numbers::pi, std::numbers::pi));
    }
    return CyclicAngle(rng.normal(nearest->heading.value(), cfg.oracle_noise));
}

std::unique_ptr<OrientationOracle> noisy_oracle(const Scenario& scenario) {
    return std::make_unique<SimulatedOracle>(scenario);
}

}  // namespace wwc
