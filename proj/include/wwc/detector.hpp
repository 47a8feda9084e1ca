#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "wwc/angles.hpp"
#include "wwc/arma.hpp"
#include "wwc/geometry.hpp"

namespace wwc {

/// One sparse sample: two detection lists captured intra_pair_dt apart at
/// stream time t.
struct FramePairObservation {
    std::int64_t sample_index = 0;
    double t = 0.0;
    double intra_pair_dt = 0.0;
    std::vector<BoundingBox> detections_1;
    std::vector<BoundingBox> detections_2;
};

enum class Direction { RightWay, WrongWay };

/// A matched detection pair that survived ensemble validation.
struct OrientedInstance {
    std::int64_t sample_index = 0;
    CyclicAngle o_det;
    CyclicAngle o_model;
    CyclicAngle o_final;
    Direction direction = Direction::RightWay;
};

struct PairCounts {
    std::int64_t sample_index = 0;
    int d_r = 0;
    int d_w = 0;
};

/// Appearance-based orientation source. Implementations must be deterministic
/// given their own seed and safely callable from concurrent contexts.
class OrientationOracle {
public:
    virtual ~OrientationOracle() = default;

    /// Orientation estimate for one detection in the frame captured at frame_time.
    virtual CyclicAngle orient(double frame_time, const BoundingBox& box) const = 0;
};

struct DetectorConfig {
    double iou_max = 0.98;                                // stationary-object mask
    double iou_min = 0.05;                                // match floor
    double div_max = 2.0 * std::numbers::pi / 3.0;        // and-strategy gate
    double classify_threshold = 2.0 * std::numbers::pi / 3.0;
    CyclicAngle o_right{};                                // expected right-way heading
    bool use_ensemble = true;   // false: classify on motion orientation alone
    bool y_axis_down = true;    // image rows grow downward
};

/// Direction of centroid displacement from box1 to box2. Throws NoMotionError
/// when the centroids coincide exactly.
CyclicAngle motion_orientation(const BoundingBox& box1, const BoundingBox& box2,
                               bool y_axis_down = true);

/// Circular mean of the oracle's two per-frame estimates for a matched pair.
CyclicAngle appearance_orientation(const OrientationOracle& oracle, double t1,
                                   const BoundingBox& box1, double t2,
                                   const BoundingBox& box2);

/// Accepts the pair when the two estimates agree within div_max (strict) and
/// returns their circular mean; empty otherwise. Requires div_max in (0, pi].
std::optional<CyclicAngle> and_strategy(CyclicAngle o_det, CyclicAngle o_model, double div_max);

/// RightWay iff the angular distance to o_right is strictly below threshold.
Direction classify(CyclicAngle o_final, CyclicAngle o_right,
                   double threshold = 2.0 * std::numbers::pi / 3.0);

struct PairResult {
    PairCounts counts;
    std::vector<OrientedInstance> instances;
};

/// Runs one sample through match -> orient -> validate -> classify. Matches
/// that fail the and-strategy or show no motion are dropped silently.
PairResult process_pair(const FramePairObservation& obs, const OrientationOracle& oracle,
                        const DetectorConfig& cfg);

struct CountSeriesPair {
    CountSeries right;
    CountSeries wrong;
};

/// Processes a whole stream into two aligned count series. Sample indices must
/// be contiguous from 0 with strictly increasing timestamps; instances visible
/// in consecutive samples are counted each time (deflation happens downstream).
CountSeriesPair process_stream(std::span<const FramePairObservation> stream,
                               const OrientationOracle& oracle, const DetectorConfig& cfg);

}  // namespace wwc
