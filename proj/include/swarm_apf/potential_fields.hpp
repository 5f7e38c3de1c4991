#pragma once

#include "swarm_apf/params.hpp"

namespace swarm_apf {

/// Decomposition of the total force on one UAV for one step.
struct ForceBreakdown {
    Vec2 attract;
    Vec2 repulse_total;
    Vec2 formation;
    Vec2 resultant;  ///< attract + repulse_total + formation
};

ForceBreakdown combine(Vec2 attract, Vec2 repulse_total, Vec2 formation);

// Classical quadratic attraction.
double att_potential(Vec2 p, Vec2 target, const SwarmParams& params);
Vec2 att_force(Vec2 p, Vec2 target, const SwarmParams& params);

// Classical obstacle repulsion, measured to the obstacle center and active
// only inside the obstacle's influence radius.
double rep_potential(Vec2 p, const Obstacle& obs, const SwarmParams& params);
Vec2 rep_force(Vec2 p, const Obstacle& obs, const SwarmParams& params);

/// Exponent of the enhanced attraction:
/// |start - target|^gamma / (|start - target| / 2 + |pos - target|).
double enhancement_exponent(const UavState& u, const SwarmParams& params);

/// Attraction toward the true target with magnitude k_att * e^rho, which
/// grows as the UAV closes in. Zero within goal_eps of the target.
/// Throws DegenerateScenarioError when start and target coincide.
Vec2 enhanced_att_force(const UavState& u, const SwarmParams& params);

/// Attraction toward a sub-goal with magnitude k_att * e^((delta / dist)^2),
/// saturated at f_cap.
Vec2 aux_att_force(const UavState& u, Vec2 aux, const SwarmParams& params);

/// Attraction used by each planner variant:
///  - TAPF: classical attraction toward the true target, sub-goals ignored;
///  - IAPF: classical attraction toward the active goal (sub-goal or target);
///  - OAPF: sub-goal attraction when a sub-goal is active, else enhanced attraction.
Vec2 attract_dispatch(const UavState& u, Variant variant, const SwarmParams& params);

}  // namespace swarm_apf
