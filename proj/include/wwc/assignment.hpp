#pragma once

#include <cstddef>
#include <vector>

#include "wwc/geometry.hpp"

namespace wwc {

/// One cross-frame correspondence: row index in the first detection list,
/// column index in the second, and the (masked) IoU that supports it.
struct MatchPair {
    std::size_t first = 0;
    std::size_t second = 0;
    double iou = 0.0;
};

/// A partial matching, sorted by first index; no index repeats on either side.
using MatchList = std::vector<MatchPair>;

/// Total supporting IoU of a match list (summed in list order).
double total_iou(const MatchList& matches);

/// Optimal bipartite matching on an IoU matrix.
///
/// Maximizes total IoU over all partial matchings; rectangular inputs are
/// padded with zero-IoU dummies internally. Pairs with IoU <= iou_min are
/// dropped from the result, and among equal-value optima the lexicographically
/// smallest pair list is returned. Requires iou_min in [0, 1) and all entries
/// in [0, 1]; an empty matrix yields an empty list.
MatchList hungarian_match(const IoUMatrix& m, double iou_min);

}  // namespace wwc
