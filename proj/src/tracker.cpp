#include "wwc/tracker.hpp"

#include <cmath>
#include <string>

#include "wwc/assignment.hpp"
#include "wwc/detector.hpp"
#include "wwc/errors.hpp"

namespace wwc {

std::vector<Track> track_stream(std::span<const DenseFrame> frames, double iou_min,
                                int max_age) {
    if (max_age < 1) {
        throw InvalidParameterError("track_stream: max_age must be at least 1");
    }
    std::vector<Track> finished;
    std::vector<Track> active;
    std::vector<int> misses;  // consecutive unmatched frames, parallel to active
    int next_id = 0;

    for (std::size_t f = 0; f < frames.size(); ++f) {
        const DenseFrame& frame = frames[f];
        if (f > 0 && !(frame.t > frames[f - 1].t)) {
            throw MalformedStreamError("track_stream: frames out of order at index " +
                                       std::to_string(f));
        }

        IoUMatrix m(active.size(), frame.detections.size());
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = 0; j < frame.detections.size(); ++j) {
                m.at(i, j) = iou(active[i].boxes.back().second, frame.detections[j]);
            }
        }
        const MatchList matches = hungarian_match(m, iou_min);

        std::vector<char> track_matched(active.size(), 0);
        std::vector<char> det_matched(frame.detections.size(), 0);
        for (const MatchPair& match : matches) {
            active[match.first].boxes.emplace_back(frame.t, frame.detections[match.second]);
            misses[match.first] = 0;
            track_matched[match.first] = 1;
            det_matched[match.second] = 1;
        }

        // Age out tracks that have gone unmatched for max_age frames.
        std::vector<Track> still_active;
        std::vector<int> still_misses;
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (!track_matched[i] && ++misses[i] >= max_age) {
                active[i].state = Track::State::Finished;
                finished.push_back(std::move(active[i]));
            } else {
                still_active.push_back(std::move(active[i]));
                still_misses.push_back(misses[i]);
            }
        }
        active = std::move(still_active);
        misses = std::move(still_misses);

        for (std::size_t j = 0; j < frame.detections.size(); ++j) {
            if (det_matched[j]) continue;
            Track track;
            track.id = next_id++;
            track.boxes.emplace_back(frame.t, frame.detections[j]);
            active.push_back(std::move(track));
            misses.push_back(0);
        }
    }

    for (Track& track : active) {
        track.state = Track::State::Finished;
        finished.push_back(std::move(track));
    }
    std::sort(finished.begin(), finished.end(),
              [](const Track& a, const Track& b) { return a.id < b.id; });
    return finished;
}

RatioReport tracks_to_ratio(std::span<const Track> tracks, CyclicAngle o_right,
                            double min_displacement, double classify_threshold,
                            bool y_axis_down) {
    int n_right = 0;
    int n_wrong = 0;
    for (const Track& track : tracks) {
        const Point first = centroid(track.boxes.front().second);
        const Point last = centroid(track.boxes.back().second);
        const double dx = last.x - first.x;
        const double dy = last.y - first.y;
        if (std::hypot(dx, dy) < min_displacement) continue;
        const CyclicAngle direction(std::atan2(y_axis_down ? dy : -dy, dx));
        if (classify(direction, o_right, classify_threshold) == Direction::RightWay) {
            ++n_right;
        } else {
            ++n_wrong;
        }
    }
    if (n_right + n_wrong == 0) {
        throw UndefinedRatioError("tracks_to_ratio: no track moved far enough to classify");
    }
    RatioReport report;
    report.sum_r = n_right;
    report.sum_w = n_wrong;
    report.ratio = report.sum_w / (report.sum_r + report.sum_w);
    return report;
}

}  // namespace wwc
