#include "swarm_apf/geometry.hpp"

#include <algorithm>

namespace swarm_apf {

Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Vec2 unit(Vec2 v, double eps_len) {
    const double n = norm(v);
    if (!(n > eps_len)) {
        throw DegenerateVectorError("cannot normalize a vector of length " + std::to_string(n));
    }
    return v / n;
}

Vec2 unit_or_zero(Vec2 v, double eps_len) {
    const double n = norm(v);
    if (!(n > eps_len)) return {};
    return v / n;
}

Vec2 cap_magnitude(Vec2 v, double cap) {
    const double n = norm(v);
    if (n > cap) return v * (cap / n);
    return v;
}

double angle_between(Vec2 a, Vec2 b, double eps_len) {
    const double na = norm(a);
    const double nb = norm(b);
    if (!(na > eps_len) || !(nb > eps_len)) {
        throw DegenerateVectorError("angle_between: degenerate argument");
    }
    const double c = std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

double wrap_angle(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    // remainder() yields [-pi, pi]; fold the closed lower end onto +pi.
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

double wrap_degrees(double x) {
    double r = std::remainder(x, 360.0);
    if (r <= -180.0) r += 360.0;
    return r;
}

}  // namespace swarm_apf
