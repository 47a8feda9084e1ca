#include "wwc/angles.hpp"

#include <cmath>
#include <string>

#include "wwc/errors.hpp"

namespace wwc {

namespace {
// Below this magnitude the decoded phase (or mean direction) is undefined.
constexpr double kDegenerateNorm = 1e-12;
}  // namespace

double CyclicAngle::normalize(double radians) {
    if (!std::isfinite(radians)) {
        throw InvalidParameterError("angle must be finite");
    }
    double r = std::remainder(radians, kTwoPi);  // [-pi, pi]
    if (r <= -std::numbers::pi) {
        r += kTwoPi;
    }
    return r;
}

PscVector psc_encode(CyclicAngle angle, std::size_t num_phases) {
    if (num_phases < 3) {
        throw InvalidParameterError(
            "psc_encode: need at least 3 phases, got " + std::to_string(num_phases));
    }
    PscVector vec;
    vec.components.resize(num_phases);
    const double m = static_cast<double>(num_phases);
    for (std::size_t i = 1; i <= num_phases; ++i) {
        const double shift = kTwoPi * static_cast<double>(i) / m;
        vec.components[i - 1] = std::cos(angle.value() + shift);
    }
    return vec;
}

CyclicAngle psc_decode(const PscVector& vec) {
    const std::size_t num_phases = vec.num_phases();
    if (num_phases < 3) {
        throw InvalidParameterError(
            "psc_decode: need at least 3 phases, got " + std::to_string(num_phases));
    }
    const double m = static_cast<double>(num_phases);
    double sin_sum = 0.0;
    double cos_sum = 0.0;
    for (std::size_t i = 1; i <= num_phases; ++i) {
        const double shift = kTwoPi * static_cast<double>(i) / m;
        sin_sum += vec.components[i - 1] * std::sin(shift);
        cos_sum += vec.components[i - 1] * std::cos(shift);
    }
    if (std::abs(sin_sum) < kDegenerateNorm && std::abs(cos_sum) < kDegenerateNorm) {
        throw DegenerateVectorError("psc_decode: phase undefined, projection sums vanish");
    }
    return CyclicAngle(-std::atan2(sin_sum, cos_sum));
}

double psc_loss(const PscVector& predicted, const PscVector& target) {
    if (predicted.num_phases() != target.num_phases()) {
        throw InvalidParameterError("psc_loss: vectors must have equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.num_phases(); ++i) {
        const double d = predicted.components[i] - target.components[i];
        sum += d * d;
    }
    return sum / static_cast<double>(predicted.num_phases());
}

double cyclic_error(CyclicAngle a, CyclicAngle b) {
    const double d = std::abs(a.value() - b.value());  // [0, 2pi)
    return d <= std::numbers::pi ? d : kTwoPi - d;
}

CyclicAngle circular_mean(CyclicAngle a, CyclicAngle b) {
    const double sin_sum = std::sin(a.value()) + std::sin(b.value());
    const double cos_sum = std::cos(a.value()) + std::cos(b.value());
    if (std::hypot(sin_sum, cos_sum) < kDegenerateNorm) {
        throw DegenerateMeanError("circular_mean: antipodal inputs have no mean direction");
    }
    return CyclicAngle(std::atan2(sin_sum, cos_sum));
}

}  // namespace wwc
