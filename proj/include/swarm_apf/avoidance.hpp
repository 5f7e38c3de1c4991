#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "swarm_apf/params.hpp"

namespace swarm_apf {

/// Half-angle of the forward detection fan.
inline constexpr double kFanHalfAngle = kPi / 4.0;

struct DetectedObstacle {
    std::size_t index = 0;        ///< position in the scenario obstacle list
    double dist = 0.0;            ///< UAV to obstacle center
    double bearing_offset = 0.0;  ///< signed angle from the path direction to the obstacle bearing
};

enum class Side { Left, Right };

struct RiskAssessment {
    std::size_t index = 0;
    double phi = 0.0;          ///< angle between path direction and UAV->obstacle direction
    double side_cross = 0.0;   ///< cross_z(UAV->obstacle, UAV->target), both unit
    Side side = Side::Right;
    double boundary = 0.0;     ///< zero-risk angle on the chosen side
    double risk = 0.0;         ///< in [0, 1]
};

/// Obstacles whose center is within min(d_pre, dis_threshold) and within
/// +-45 degrees of `direction`, nearest first.
std::vector<DetectedObstacle> sense_along(Vec2 pos, Vec2 direction, std::span<const Obstacle> obstacles,
                                          const SwarmParams& params);

/// sense_along() using the UAV's current heading.
std::vector<DetectedObstacle> sense(const UavState& u, std::span<const Obstacle> obstacles,
                                    const SwarmParams& params);

/// Piecewise-linear risk ramp: 1 for phi <= inner, linear down to 0 at
/// boundary, 0 beyond.
double collision_risk(double phi, double inner, double boundary);

/// Risk of `obs` when flying along `direction` toward `target`.
RiskAssessment assess_risk_along(Vec2 pos, Vec2 direction, Vec2 target, const Obstacle& obs, std::size_t index,
                                 const SwarmParams& params);

/// Risk of a detected obstacle along the UAV's current heading.
RiskAssessment assess_risk(const UavState& u, const Obstacle& obs, const DetectedObstacle& det,
                           const SwarmParams& params);

/// The two candidate sub-goals at distance d_safe from the obstacle center,
/// on the line through the center perpendicular to the UAV->obstacle line.
/// Element 0 lies to the left (counter-clockwise side) of the UAV->obstacle
/// direction, element 1 to the right.
/// Throws DegenerateVectorError when the UAV sits on the obstacle center.
std::array<Vec2, 2> gen_subgoals(Vec2 uav_pos, const Obstacle& obs, const SwarmParams& params);

/// Picks the candidate on the side where the target lies relative to the
/// UAV->obstacle line. When the target is on that line, the candidate that
/// needs the smaller heading change wins (left on an exact tie).
SubGoal select_subgoal(const UavState& u, const std::array<Vec2, 2>& pair, const RiskAssessment& risk,
                       int step, const SwarmParams& params);

/// True when the active sub-goal should be dropped: the UAV reached it, or
/// flying straight at the true target would see its source obstacle with
/// risk at most release_risk (outside the fan counts as zero risk).
bool should_release(const UavState& u, std::span<const Obstacle> obstacles, const SwarmParams& params);

/// Per-step goal lifecycle. `assessments` are this step's heading-based
/// assessments. Returns the goal to steer toward (empty = true target).
std::optional<SubGoal> update_goal(const UavState& u, std::span<const RiskAssessment> assessments,
                                   std::span<const Obstacle> obstacles, int step, const SwarmParams& params);

/// Whether obstacle `index` contributes classical repulsion under a
/// sub-goal planner: only obstacles assessed this step with risk above the
/// threshold repel, and never the source of the active sub-goal. Obstacles
/// outside the fan carry no risk.
bool repulsion_active(std::size_t index, const std::optional<SubGoal>& goal,
                      std::span<const RiskAssessment> assessments, const SwarmParams& params);

}  // namespace swarm_apf
