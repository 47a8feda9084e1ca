#include "wwc/ensemble_math.hpp"

#include "wwc/errors.hpp"
#include "wwc/rng.hpp"

namespace wwc {

namespace {

void check(const ErrorRates& rates) {
    if (!(rates.p1 > 0.0 && rates.p1 <= 0.5) || !(rates.p2 > 0.0 && rates.p2 <= 0.5)) {
        throw InvalidParameterError("error rates must lie in (0, 0.5]");
    }
}

}  // namespace

double ensemble_error(const ErrorRates& rates) {
    check(rates);
    const double both_err = rates.p1 * rates.p2;
    return both_err / ((1.0 - rates.p1) * (1.0 - rates.p2) + both_err);
}

double validity_rate(const ErrorRates& rates) {
    check(rates);
    return (1.0 - rates.p1) * (1.0 - rates.p2) + rates.p1 * rates.p2;
}

MonteCarloEnsembleResult monte_carlo_ensemble(const ErrorRates& rates, std::uint64_t trials,
                                              std::uint64_t seed) {
    check(rates);
    if (trials < 1) {
        throw InvalidParameterError("monte_carlo_ensemble: need at least one trial");
    }
    Rng rng(seed);
    std::uint64_t valid = 0;
    std::uint64_t erred = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const bool err1 = rng.uniform() < rates.p1;
        const bool err2 = rng.uniform() < rates.p2;
        if (err1 == err2) {
            ++valid;
            if (err1) {
                ++erred;
            }
        }
    }
    MonteCarloEnsembleResult result;
    result.trials = trials;
    result.valid_trials = valid;
    result.validity_rate = static_cast<double>(valid) / static_cast<double>(trials);
    result.error_rate =
        valid == 0 ? 0.0 : static_cast<double>(erred) / static_cast<double>(valid);
    return result;
}

}  // namespace wwc
