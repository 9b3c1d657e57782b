#ifndef SZEGO_ANGLE_HPP
#define SZEGO_ANGLE_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "szego/errors.hpp"

namespace szego {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to the canonical representative in [-pi, pi).
inline double canonical_angle(double theta) {
    double t = std::remainder(theta, kTwoPi); // (-pi, pi]
    if (t >= kPi) t -= kTwoPi;
    return t;
}

/// Angle on the circle, always stored canonically in [-pi, pi).
struct Angle {
    double theta = 0.0;

    Angle() = default;
    explicit Angle(double t) : theta(canonical_angle(t)) {}

    friend bool operator<(Angle a, Angle b) { return a.theta < b.theta; }
    friend bool operator==(Angle a, Angle b) { return a.theta == b.theta; }
};

/// Geodesic distance on the circle: min(|dt|, 2pi - |dt|).
inline double circle_distance(double t1, double t2) {
    double d = std::fabs(canonical_angle(t1 - t2));
    return d; // canonical_angle already folds into [-pi, pi)
}

inline double circle_distance(Angle a, Angle b) {
    return circle_distance(a.theta, b.theta);
}

/// Point e^{i theta} on the unit circle.
struct CirclePoint {
    std::complex<double> value{1.0, 0.0};
    Angle angle;

    CirclePoint() = default;

    static CirclePoint from_angle(double theta) {
        CirclePoint p;
        p.angle = Angle(theta);
        p.value = std::polar(1.0, p.angle.theta);
        return p;
    }

    static CirclePoint from_value(std::complex<double> z) {
        if (std::fabs(std::abs(z) - 1.0) > 1e-12)
            throw DomainError("CirclePoint: |z| deviates from 1 beyond 1e-12");
        CirclePoint p;
        p.angle = Angle(std::arg(z));
        p.value = z / std::abs(z);
        return p;
    }
};

} // namespace szego

#endif
