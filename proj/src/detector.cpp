#include "wwc/detector.hpp"

#include <cmath>
#include <string>

#include "wwc/assignment.hpp"
#include "wwc/errors.hpp"

namespace wwc {

CyclicAngle motion_orientation(const BoundingBox& box1, const BoundingBox& box2,
                               bool y_axis_down) {
    const Point c1 = centroid(box1);
    const Point c2 = centroid(box2);
    const double dx = c2.x - c1.x;
    const double dy = c2.y - c1.y;
    if (dx == 0.0 && dy == 0.0) {
        throw NoMotionError("motion_orientation: centroids coincide");
    }
    return CyclicAngle(std::atan2(y_axis_down ? dy : -dy, dx));
}

CyclicAngle appearance_orientation(const OrientationOracle& oracle, double t1,
                                   const BoundingBox& box1, double t2,
                                   const BoundingBox& box2) {
    return circular_mean(oracle.orient(t1, box1), oracle.orient(t2, box2));
}

std::optional<CyclicAngle> and_strategy(CyclicAngle o_det, CyclicAngle o_model, double div_max) {
    if (!(div_max > 0.0 && div_max <= std::numbers::pi)) {
        throw InvalidParameterError("and_strategy: div_max must lie in (0, pi]");
    }
    if (cyclic_error(o_det, o_model) < div_max) {
        return circular_mean(o_det, o_model);
    }
    return std::nullopt;
}

Direction classify(CyclicAngle o_final, CyclicAngle o_right, double threshold) {
    return cyclic_error(o_final, o_right) < threshold ? Direction::RightWay
                                                      : Direction::WrongWay;
}

PairResult process_pair(const FramePairObservation& obs, const OrientationOracle& oracle,
                        const DetectorConfig& cfg) {
    if (!(obs.intra_pair_dt > 0.0)) {
        throw InvalidParameterError("process_pair: intra_pair_dt must be positive");
    }
    PairResult result;
    result.counts.sample_index = obs.sample_index;

    const IoUMatrix masked =
        mask_stationary(iou_matrix(obs.detections_1, obs.detections_2), cfg.iou_max);
    const MatchList matches = hungarian_match(masked, cfg.iou_min);

    const double t1 = obs.t;
    const double t2 = obs.t + obs.intra_pair_dt;
    for (const MatchPair& match : matches) {
        const BoundingBox& box1 = obs.detections_1[match.first];
        const BoundingBox& box2 = obs.detections_2[match.second];
        const Point c1 = centroid(box1);
        const Point c2 = centroid(box2);
        if (c1.x == c2.x && c1.y == c2.y) {
            continue;  // stationary leftover that slipped past the IoU mask
        }
        const CyclicAngle o_det = motion_orientation(box1, box2, cfg.y_axis_down);

        OrientedInstance instance;
        instance.sample_index = obs.sample_index;
        instance.o_det = o_det;
        if (cfg.use_ensemble) {
            instance.o_model = appearance_orientation(oracle, t1, box1, t2, box2);
            const std::optional<CyclicAngle> validated =
                and_strategy(o_det, instance.o_model, cfg.div_max);
            if (!validated) {
                continue;  // the two estimates disagree; invalid sample
            }
            instance.o_final = *validated;
        } else {
            instance.o_model = o_det;
            instance.o_final = o_det;
        }
        instance.direction = classify(instance.o_final, cfg.o_right, cfg.classify_threshold);
        if (instance.direction == Direction::RightWay) {
            ++result.counts.d_r;
        } else {
            ++result.counts.d_w;
        }
        result.instances.push_back(instance);
    }
    return result;
}

CountSeriesPair process_stream(std::span<const FramePairObservation> stream,
                               const OrientationOracle& oracle, const DetectorConfig& cfg) {
    CountSeriesPair series;
    series.right.label = FlowLabel::RightWay;
    series.wrong.label = FlowLabel::WrongWay;
    series.right.values.reserve(stream.size());
    series.wrong.values.reserve(stream.size());

    for (std::size_t k = 0; k < stream.size(); ++k) {
        const FramePairObservation& obs = stream[k];
        if (obs.sample_index != static_cast<std::int64_t>(k)) {
            throw MalformedStreamError("process_stream: sample " + std::to_string(k) +
                                       " has index " + std::to_string(obs.sample_index));
        }
        if (k > 0 && !(obs.t > stream[k - 1].t)) {
            throw MalformedStreamError("process_stream: timestamps must increase at sample " +
                                       std::to_string(k));
        }
        const PairResult pair = process_pair(obs, oracle, cfg);
        series.right.values.push_back(pair.counts.d_r);
        series.wrong.values.push_back(pair.counts.d_w);
    }
    if (stream.size() >= 2) {
        series.right.t_gap = stream[1].t - stream[0].t;
        series.wrong.t_gap = series.right.t_gap;
    }
    return series;
}

}  // namespace wwc
