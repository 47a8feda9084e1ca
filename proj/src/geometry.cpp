#include "wwc/geometry.hpp"

#include <algorithm>

#include "wwc/errors.hpp"

namespace wwc {

void validate(const BoundingBox& box) {
    if (!(box.x_min < box.x_max) || !(box.y_min < box.y_max)) {
        throw InvalidParameterError("bounding box must have strictly positive extent");
    }
    if (!(box.confidence >= 0.0 && box.confidence <= 1.0)) {
        throw InvalidParameterError("bounding box confidence must lie in [0, 1]");
    }
}

Point centroid(const BoundingBox& box) {
    return {0.5 * (box.x_min + box.x_max), 0.5 * (box.y_min + box.y_max)};
}

double area(const BoundingBox& box) {
    return (box.x_max - box.x_min) * (box.y_max - box.y_min);
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double w = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    const double h = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (w <= 0.0 || h <= 0.0) {
        return 0.0;
    }
    const double inter = w * h;
    return inter / (area(a) + area(b) - inter);
}

IoUMatrix iou_matrix(std::span<const BoundingBox> set1, std::span<const BoundingBox> set2) {
    IoUMatrix m(set1.size(), set2.size());
    for (std::size_t i = 0; i < set1.size(); ++i) {
        for (std::size_t j = 0; j < set2.size(); ++j) {
            m.at(i, j) = iou(set1[i], set2[j]);
        }
    }
    return m;
}

IoUMatrix mask_stationary(IoUMatrix m, double iou_max) {
    if (!(iou_max > 0.0 && iou_max <= 1.0)) {
        throw InvalidParameterError("mask_stationary: iou_max must lie in (0, 1]");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) >= iou_max) {
                m.at(i, j) = 0.0;
            }
        }
    }
    return m;
}

}  // namespace wwc
