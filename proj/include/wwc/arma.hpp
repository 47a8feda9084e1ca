#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wwc {

enum class FlowLabel { RightWay, WrongWay };

/// Per-sample event counts from the sparse detector, one value per sample.
struct CountSeries {
    std::vector<int> values;
    double t_gap = 0.0;  // seconds between samples
    FlowLabel label = FlowLabel::RightWay;
};

/// Fitted ARMA(p, q) parameters, p and q in {0, 1}.
///
/// Model: D_k = c + phi * D_{k-1} + eps_k + theta * eps_{k-1}, with the
/// innovations recursion started at eps_0 = 0 and conditioned on the first
/// observation. log_objective is the conditional Gaussian log-likelihood at
/// the fitted parameters.
struct ArmaFit {
    int p = 0;
    int q = 0;
    double c = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    double sigma2 = 0.0;
    double log_objective = 0.0;
};

/// Persistence-corrected event estimates, one per source sample from index 1.
struct DeflatedSeries {
    std::vector<double> values;
    FlowLabel label = FlowLabel::RightWay;
};

struct RatioReport {
    double ratio = 0.0;   // clamped to [0, 1]
    double sum_r = 0.0;   // raw deflated sums, negatives preserved
    double sum_w = 0.0;
    bool negative_mass_warning = false;
};

struct ArmaOrders {
    int p = 1;
    int q = 0;
};

/// Fits ARMA(p, q) by minimizing the conditional sum of squared innovations.
///
/// For a fixed MA coefficient the problem is linear in (c, phi) and solved in
/// closed form; when q = 1 the MA coefficient is located by a deterministic
/// grid scan plus golden-section refinement over [-0.999, 0.999]. The AR
/// coefficient is constrained to the same interval. Requires at least 3
/// observations (10 when q = 1) and a non-constant series.
ArmaFit fit_arma(std::span<const double> values, int p, int q);
ArmaFit fit_arma(const CountSeries& series, int p, int q);

/// Removes the persisting share of the previous sample: out_k = D_k - phi * D_{k-1}.
std::vector<double> deflate(std::span<const double> values, double phi);
DeflatedSeries deflate(const CountSeries& series, double phi);

/// Wrong-way share of the deflated event mass. Requires equally long inputs
/// and a positive combined sum.
RatioReport wwc_ratio(const DeflatedSeries& right, const DeflatedSeries& wrong);

struct EstimateResult {
    RatioReport report;
    std::optional<ArmaFit> right_fit;  // absent when the series short-circuited
    std::optional<ArmaFit> wrong_fit;
};

/// Full temporal estimate: fit each series with its orders, deflate each with
/// its own AR coefficient, and form the ratio. An identically zero series
/// contributes zero mass without being fitted.
EstimateResult estimate_from_counts(const CountSeries& right, const CountSeries& wrong,
                                    ArmaOrders right_orders = {1, 1},
                                    ArmaOrders wrong_orders = {1, 0});

/// Generated series plus the pre-rounding values the recursion produced.
struct SimulatedSeries {
    CountSeries counts;          // rounded to non-negative integers
    std::vector<double> latent;  // exact recursion output
};

/// Draws a series from the ARMA recursion with Gaussian innovations. A fixed
/// burn-in is discarded so the output starts near stationarity.
SimulatedSeries simulate_arma(const ArmaFit& fit, std::size_t length, std::uint64_t seed,
                              double t_gap = 2.0, FlowLabel label = FlowLabel::RightWay);

}  // namespace wwc
