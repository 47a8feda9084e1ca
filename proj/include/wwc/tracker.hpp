#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "wwc/angles.hpp"
#include "wwc/arma.hpp"
#include "wwc/geometry.hpp"
#include "wwc/simulator.hpp"

namespace wwc {

/// One tracked identity across a dense frame stream.
struct Track {
    enum class State { Active, Finished };

    int id = 0;
    std::vector<std::pair<double, BoundingBox>> boxes;  // (t, box), time-ordered
    State state = State::Active;
};

/// Greedy IoU tracking-by-detection: per frame, Hungarian-match active tracks'
/// last boxes against the new detections; unmatched detections spawn tracks,
/// and a track unmatched for max_age consecutive frames finishes. No motion
/// model. Frames must be time-ordered.
std::vector<Track> track_stream(std::span<const DenseFrame> frames, double iou_min = 0.05,
                                int max_age = 3);

/// Classifies each track by its net first-to-last centroid displacement
/// against o_right (same 2pi/3 rule as the sparse detector) and returns the
/// wrong-way share over unique tracks. Tracks moving less than
/// min_displacement pixels are excluded; throws UndefinedRatioError when no
/// track qualifies.
RatioReport tracks_to_ratio(std::span<const Track> tracks, CyclicAngle o_right,
                            double min_displacement = 10.0,
                            double classify_threshold = 2.0 * std::numbers::pi / 3.0,
                            bool y_axis_down = true);

}  // namespace wwc
