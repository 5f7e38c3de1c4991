#include "swarm_apf/avoidance.hpp"

#include <algorithm>
#include <cmath>

namespace swarm_apf {

namespace {

// |cross| at or below this counts as "target on the UAV->obstacle line".
constexpr double kSideTieEps = 1e-12;

double sensing_range(const SwarmParams& params) { return std::min(params.d_pre, params.dis_threshold); }

}  // namespace

std::vector<DetectedObstacle> sense_along(Vec2 pos, Vec2 direction, std::span<const Obstacle> obstacles,
                                          const SwarmParams& params) {
    std::vector<DetectedObstacle> out;
    const double range = sensing_range(params);
    const double heading = bearing(direction);
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const Vec2 delta = obstacles[i].center - pos;
        const double dist = norm(delta);
        if (dist > range) continue;
        const double offset = dist > params.eps_len ? wrap_angle(bearing(delta) - heading) : 0.0;
        if (std::abs(offset) > kFanHalfAngle) continue;
        out.push_back({i, dist, offset});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const DetectedObstacle& a, const DetectedObstacle& b) { return a.dist < b.dist; });
    return out;
}

std::vector<DetectedObstacle> sense(const UavState& u, std::span<const Obstacle> obstacles,
                                    const SwarmParams& params) {
    return sense_along(u.pos, from_bearing(u.heading), obstacles, params);
}

double collision_risk(double phi, double inner, double boundary) {
    if (phi <= inner) return 1.0;
    if (phi >= boundary) return 0.0;
    return 1.0 - (phi - inner) / (boundary - inner);
}

RiskAssessment assess_risk_along(Vec2 pos, Vec2 direction, Vec2 target, const Obstacle& obs, std::size_t index,
                                 const SwarmParams& params) {
    RiskAssessment out;
    out.index = index;
    out.boundary = deg_to_rad(params.theta_bound_deg);
    const Vec2 to_obs = unit_or_zero(obs.center - pos, params.eps_len);
    const Vec2 to_target = unit_or_zero(target - pos, params.eps_len);
    out.side_cross = cross_z(to_obs, to_target);
    out.side = out.side_cross > 0 ? Side::Left : Side::Right;
    if (to_obs == Vec2{} || !(norm(direction) > params.eps_len)) {
        out.phi = 0.0;
        out.risk = 1.0;
        return out;
    }
    out.phi = angle_between(direction, to_obs, params.eps_len);
    out.risk = collision_risk(out.phi, deg_to_rad(params.theta_inner_deg), out.boundary);
    return out;
}

RiskAssessment assess_risk(const UavState& u, const Obstacle& obs, const DetectedObstacle& det,
                           const SwarmParams& params) {
    return assess_risk_along(u.pos, from_bearing(u.heading), u.target, obs, det.index, params);
}

std::array<Vec2, 2> gen_subgoals(Vec2 uav_pos, const Obstacle& obs, const SwarmParams& params) {
    const Vec2 normal = perp_ccw(unit(obs.center - uav_pos, params.eps_len));
    return {obs.center + params.d_safe * normal, obs.center - params.d_safe * normal};
}

SubGoal select_subgoal(const UavState& u, const std::array<Vec2, 2>& pair, const RiskAssessment& risk, int step,
                       const SwarmParams& params) {
    std::size_t pick = risk.side == Side::Left ? 0 : 1;
    if (std::abs(risk.side_cross) <= kSideTieEps) {
        const Vec2 heading = from_bearing(u.heading);
        const double left = dot(heading, unit_or_zero(pair[0] - u.pos, params.eps_len));
        const double right = dot(heading, unit_or_zero(pair[1] - u.pos, params.eps_len));
        pick = right > left ? 1 : 0;
    }
    return SubGoal{pair[pick], risk.index, step};
}

bool should_release(const UavState& u, std::span<const Obstacle> obstacles, const SwarmParams& params) {
    if (!u.subgoal) return false;
    if (distance(u.pos, u.subgoal->pos) <= params.goal_eps) return true;
    const Vec2 to_target = u.target - u.pos;
    if (!(norm(to_target) > params.eps_len)) return true;
    const Vec2 dir = unit(to_target, params.eps_len);
    for (const auto& det : sense_along(u.pos, dir, obstacles, params)) {
        if (det.index != u.subgoal->source_obstacle) continue;
        const auto risk = assess_risk_along(u.pos, dir, u.target, obstacles[det.index], det.index, params);
        return risk.risk <= params.release_risk;
    }
    return true;
}

std::optional<SubGoal> update_goal(const UavState& u, std::span<const RiskAssessment> assessments,
                                   std::span<const Obstacle> obstacles, int step, const SwarmParams& params) {
    if (u.subgoal) {
        if (should_release(u, obstacles, params)) return std::nullopt;
        return u.subgoal;
    }
    const RiskAssessment* worst = nullptr;
    for (const auto& a : assessments) {
        if (worst == nullptr || a.risk > worst->risk) worst = &a;
    }
    if (worst == nullptr || !(worst->risk > params.risk_threshold)) return std::nullopt;
    const auto pair = gen_subgoals(u.pos, obstacles[worst->index], params);
    return select_subgoal(u, pair, *worst, step, params);
}

bool repulsion_active(std::size_t index, const std::optional<SubGoal>& goal,
                      std::span<const RiskAssessment> assessments, const SwarmParams& params) {
    if (goal && goal->source_obstacle == index) return false;
    for (const auto& a : assessments) {
        if (a.index == index) return a.risk > params.risk_threshold;
    }
    // Not in the fan: no collision risk, hence no repulsion.
    return false;
}

}  // namespace swarm_apf
