#include "wwc/assignment.hpp"

#include <cmath>
#include <limits>

#include "wwc/errors.hpp"

namespace wwc {

namespace {

// Cost assigned to a cell a constrained solve must avoid. Large enough to
// dominate any sum of real costs (each in [0, 1], n <= a few hundred).
constexpr double kForbidden = 1e6;

// Two totals within this of each other are treated as the same optimum.
constexpr double kTieTolerance = 1e-10;

// Minimum-cost perfect assignment on a dense square matrix (potentials +
// augmenting paths, O(n^3)). Returns the optimal total cost; row_to_col
// receives the assignment.
double solve_square(const std::vector<std::vector<double>>& cost, std::vector<int>& row_to_col) {
    const int n = static_cast<int>(cost.size());
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, std::numeric_limits<double>::infinity());
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = std::numeric_limits<double>::infinity();
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    row_to_col.assign(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        total += cost[i][row_to_col[i]];
    }
    return total;
}

}  // namespace

double total_iou(const MatchList& matches) {
    double total = 0.0;
    for (const MatchPair& m : matches) {
        total += m.iou;
    }
    return total;
}

MatchList hungarian_match(const IoUMatrix& m, double iou_min) {
    if (!(iou_min >= 0.0 && iou_min < 1.0)) {
        throw InvalidParameterError("hungarian_match: iou_min must lie in [0, 1)");
    }
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double value = m.at(i, j);
            if (!(value >= 0.0 && value <= 1.0)) {
                throw InvalidParameterError("hungarian_match: IoU entries must lie in [0, 1]");
            }
        }
    }
    if (m.empty()) {
        return {};
    }

    // Square cost matrix: cost = 1 - IoU, dummies cost 1 (IoU 0).
    const std::size_t n = std::max(rows, cols);
    std::vector<std::vector<double>> base(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            base[i][j] = 1.0 - m.at(i, j);
        }
    }

    std::vector<int> assignment;
    const double optimum = solve_square(base, assignment);

    // Lock rows one by one to the smallest column that keeps the optimum
    // reachable, so ties resolve to the lexicographically smallest pair list.
    std::vector<std::vector<double>> cost = base;
    std::vector<char> col_taken(n, 0);
    MatchList matches;
    for (std::size_t i = 0; i < rows; ++i) {
        bool locked = false;
        for (std::size_t j = 0; j < cols && !locked; ++j) {
            if (col_taken[j] || m.at(i, j) <= iou_min) continue;
            std::vector<std::vector<double>> trial = cost;
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj != j) trial[i][jj] = kForbidden;
            }
            if (solve_square(trial, assignment) <= optimum + kTieTolerance) {
                cost = std::move(trial);
                col_taken[j] = 1;
                matches.push_back({i, j, m.at(i, j)});
                locked = true;
            }
        }
        if (!locked) {
            // No retained pairing for this row preserves the optimum; keep the
            // row away from every remaining retained-eligible column.
            for (std::size_t j = 0; j < cols; ++j) {
                if (!col_taken[j] && m.at(i, j) > iou_min) {
                    cost[i][j] = kForbidden;
                }
            }
        }
    }
    return matches;
}

}  // namespace wwc
