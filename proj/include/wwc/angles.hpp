#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace wwc {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An orientation in radians, normalized to (-pi, pi].
class CyclicAngle {
public:
    CyclicAngle() = default;
    explicit CyclicAngle(double radians) : value_(normalize(radians)) {}

    double value() const { return value_; }

    /// Maps any finite radian value into (-pi, pi].
    static double normalize(double radians);

private:
    double value_ = 0.0;
};

/// Phase-shifting code for a cyclic angle: m cosine phases, each in [-1, 1].
struct PscVector {
    std::vector<double> components;

    std::size_t num_phases() const { return components.size(); }
};

/// Encodes an angle as num_phases cosine components. Requires num_phases >= 3.
PscVector psc_encode(CyclicAngle angle, std::size_t num_phases);

/// Recovers the phase of a PSC vector via the quadrant-aware arctangent of the
/// sine/cosine-weighted component sums. Inverse of psc_encode on (-pi, pi].
CyclicAngle psc_decode(const PscVector& vec);

/// Mean squared component difference between two equally sized PSC vectors.
double psc_loss(const PscVector& predicted, const PscVector& target);

/// Angular distance in [0, pi]; the absolute difference folded across pi.
double cyclic_error(CyclicAngle a, CyclicAngle b);

/// Wrap-safe midpoint of two angles, on the shorter arc between them.
/// Undefined (throws DegenerateMeanError) for antipodal inputs.
CyclicAngle circular_mean(CyclicAngle a, CyclicAngle b);

}  // namespace wwc
