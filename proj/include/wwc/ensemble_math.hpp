#pragma once

#include <cstdint>

namespace wwc {

/// Per-model misclassification probabilities, each in (0, 0.5].
struct ErrorRates {
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Probability that an instance surviving the and-strategy is misclassified:
/// p1*p2 / ((1-p1)(1-p2) + p1*p2). Never exceeds min(p1, p2).
double ensemble_error(const ErrorRates& rates);

/// Probability that the two models agree (both right or both wrong):
/// (1-p1)(1-p2) + p1*p2.
double validity_rate(const ErrorRates& rates);

struct MonteCarloEnsembleResult {
    double error_rate = 0.0;     // erred-given-valid frequency (0 if nothing valid)
    double validity_rate = 0.0;  // valid-trial frequency
    std::uint64_t valid_trials = 0;
    std::uint64_t trials = 0;
};

/// Simulates two independent error events per trial; a trial is valid when the
/// events agree. Empirical counterpart of ensemble_error / validity_rate.
MonteCarloEnsembleResult monte_carlo_ensemble(const ErrorRates& rates, std::uint64_t trials,
                                              std::uint64_t seed);

}  // namespace wwc
