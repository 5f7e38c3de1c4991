#include "swarm_apf/potential_fields.hpp"

#include <algorithm>
#include <cmath>

namespace swarm_apf {

ForceBreakdown combine(Vec2 attract, Vec2 repulse_total, Vec2 formation) {
    return {attract, repulse_total, formation, attract + repulse_total + formation};
}

double att_potential(Vec2 p, Vec2 target, const SwarmParams& params) {
    const Vec2 delta = target - p;
    return 0.5 * params.k_att * dot(delta, delta);
}

Vec2 att_force(Vec2 p, Vec2 target, const SwarmParams& params) {
    const Vec2 delta = target - p;
    if (!(norm(delta) > params.eps_len)) return {};
    return params.k_att * delta;
}

double rep_potential(Vec2 p, const Obstacle& obs, const SwarmParams& params) {
    const double dist = std::max(distance(obs.center, p), params.eps_len);
    if (dist > obs.influence) return 0.0;
    const double g = 1.0 / dist - 1.0 / obs.influence;
    return 0.5 * params.k_rep * g * g;
}

Vec2 rep_force(Vec2 p, const Obstacle& obs, const SwarmParams& params) {
    const Vec2 away = p - obs.center;
    const double dist = std::max(norm(away), params.eps_len);
    if (dist > obs.influence) return {};
    const double m = params.k_rep * (1.0 / dist - 1.0 / obs.influence) / (dist * dist);
    return m * unit_or_zero(away, params.eps_len);
}

double enhancement_exponent(const UavState& u, const SwarmParams& params) {
    const double span = distance(u.start, u.target);
    if (!(span > params.eps_len)) {
        throw DegenerateScenarioError("enhanced attraction: start coincides with target for UAV " +
                                      std::to_string(u.id));
    }
    return std::pow(span, params.gamma) / (span / 2.0 + distance(u.pos, u.target));
}

Vec2 enhanced_att_force(const UavState& u, const SwarmParams& params) {
    const double rho = enhancement_exponent(u, params);
    const Vec2 delta = u.target - u.pos;
    if (norm(delta) <= params.goal_eps) return {};
    const double m = std::min(params.k_att * std::exp(rho), params.f_cap);
    return m * unit(delta, params.eps_len);
}

Vec2 aux_att_force(const UavState& u, Vec2 aux, const SwarmParams& params) {
    const Vec2 delta = aux - u.pos;
    const double dist = std::max(norm(delta), params.eps_len);
    const double ratio = params.delta / dist;
    // exp overflows to +inf long before the ratio itself does; min() handles both.
    const double m = std::min(params.k_att * std::exp(ratio * ratio), params.f_cap);
    return m * unit_or_zero(delta, params.eps_len);
}

Vec2 attract_dispatch(const UavState& u, Variant variant, const SwarmParams& params) {
    switch (variant) {
        case Variant::TAPF:
            return att_force(u.pos, u.target, params);
        case Variant::IAPF:
            return att_force(u.pos, active_goal_position(u), params);
        case Variant::OAPF:
            if (u.subgoal) return aux_att_force(u, u.subgoal->pos, params);
            return enhanced_att_force(u, params);
    }
    return {};
}

}  // namespace swarm_apf
