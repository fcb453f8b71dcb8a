#pragma once

#include <cmath>
#include <numbers>

namespace globdyn {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle into [0, 2 pi).
inline double normalize_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

inline double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }
inline double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

/// Shortest arc-length distance between two angles, in [0, pi].
inline double circle_distance(double a, double b) {
    const double d = normalize_angle(a - b);
    return d > std::numbers::pi ? kTwoPi - d : d;
}

}  // namespace globdyn
