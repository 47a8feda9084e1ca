#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wwc {

/// Axis-aligned detection rectangle in continuous pixel coordinates.
struct BoundingBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;
    double confidence = 1.0;
    int class_tag = 0;  // non-motor vehicle = 0
};

/// Throws InvalidParameterError unless the box has strictly positive area
/// and a confidence in [0, 1].
void validate(const BoundingBox& box);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point centroid(const BoundingBox& box);

double area(const BoundingBox& box);

/// Intersection over union; 0 for disjoint boxes, 1 for identical ones.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Dense |set1| x |set2| matrix of pairwise IoU values.
class IoUMatrix {
public:
    IoUMatrix() = default;
    IoUMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

IoUMatrix iou_matrix(std::span<const BoundingBox> set1, std::span<const BoundingBox> set2);

/// Zeroes entries at or above iou_max; such near-total overlaps are treated
/// as the same stationary object seen twice. Requires iou_max in (0, 1].
IoUMatrix mask_stationary(IoUMatrix m, double iou_max);

}  // namespace wwc
