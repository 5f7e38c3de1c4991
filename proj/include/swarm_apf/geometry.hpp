#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swarm_apf {

/// Base class for every error raised by the library.
class SwarmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A direction was requested from a vector too short to define one.
class DegenerateVectorError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

/// Planar position or direction, in meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z component of the 3-D cross product a x b; positive when b lies
/// counter-clockwise of a.
constexpr double cross_z(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Counter-clockwise rotation by 90 degrees.
constexpr Vec2 perp_ccw(Vec2 v) { return {-v.y, v.x}; }

Vec2 rotate(Vec2 v, double angle);

/// Unit vector along v. Throws DegenerateVectorError when norm(v) <= eps_len.
Vec2 unit(Vec2 v, double eps_len);

/// Unit vector along v, or the zero vector when norm(v) <= eps_len.
Vec2 unit_or_zero(Vec2 v, double eps_len);

/// Scales v down so that its magnitude does not exceed cap.
Vec2 cap_magnitude(Vec2 v, double cap);

/// Unsigned angle in [0, pi] between a and b.
/// Throws DegenerateVectorError if either vector is shorter than eps_len.
double angle_between(Vec2 a, Vec2 b, double eps_len);

/// Maps x into (-pi, pi].
double wrap_angle(double x);

/// Maps x (degrees) into (-180, 180].
double wrap_degrees(double x);

/// Bearing of v measured from +x, in (-pi, pi].
inline double bearing(Vec2 v) { return std::atan2(v.y, v.x); }

inline Vec2 from_bearing(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace swarm_apf
