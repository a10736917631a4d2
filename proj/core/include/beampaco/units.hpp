#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <numbers>

namespace beampaco {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kAu = 1.495978707e11;          // m
inline constexpr double kDay = 86400.0;                // s
inline constexpr double kYear = 365.25;                // days
inline constexpr double kMuSun = 1.32712440018e20;     // m^3/s^2
inline constexpr double kStandardGravity = 9.80665;    // m/s^2
inline constexpr double kDegree = std::numbers::pi / 180.0;

inline constexpr double days_to_seconds(double days) { return days * kDay; }
inline constexpr double seconds_to_days(double s) { return s / kDay; }

}  // namespace beampaco
