#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarm_apf/geometry.hpp"

namespace swarm_apf {

/// A parameter or scenario invariant was violated.
class ValidationError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

/// Start and target coincide, or a similar geometric impossibility.
class DegenerateScenarioError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

/// Every tunable of the planners. Field names double as scenario-file keys.
///
/// The first block holds the swarm and force-law constants. The second
/// holds risk, sub-goal, motion and termination settings.
struct SwarmParams {
    double r = 6.0;              ///< communication radius
    double d = 4.0;              ///< ideal inter-UAV spacing
    double phi = 0.7;            ///< allowed spacing deviation
    double alpha = 0.1;          ///< inter-UAV attraction gain
    double beta = 10.0;          ///< inter-UAV repulsion gain
    double k_att = 1.0;
    double k_rep = 500.0;
    double d_pre = 6.0;          ///< forward fan detection radius
    double gamma = 1.2;          ///< exponent of the enhanced attraction
    double delta = 16.0;         ///< sub-goal attraction distance scale
    double dis_threshold = 6.0;  ///< sensor distance cut-off

    double step_len = 0.2;
    double theta_inner_deg = 15.0;   ///< full-risk cone half-angle
    double theta_bound_deg = 45.0;   ///< zero-risk boundary (both sides)
    double risk_threshold = 0.5;
    double release_risk = 0.0;       ///< sub-goal dropped once the target bearing is this safe
    double d_safe = 3.0;             ///< sub-goal offset from the obstacle center
    double goal_eps = 0.5;
    int max_steps = 5000;
    double eps_len = 1e-9;
    double f_cap = 1e3;              ///< saturation of the sub-goal, enhanced and spacing forces
    int k_max = 0;                   ///< nearest-neighbor cap, 0 = unlimited
};

/// Equality tolerance used when deciding dist == d in the interaction force.
inline constexpr double kTieEps = 1e-9;

/// Throws ValidationError naming the first violated invariant.
void validate(const SwarmParams& params);

/// All parameters as (key, value) pairs in canonical order.
std::vector<std::pair<std::string, double>> param_entries(const SwarmParams& params);

/// Sets a parameter by key. Returns false for an unknown key; throws
/// ValidationError if an integer field receives a non-integral value.
bool set_param(SwarmParams& params, std::string_view key, double value);

/// "r=6;d=4;..." in canonical order, shortest round-trip number formatting.
std::string params_signature(const SwarmParams& params);

struct Obstacle {
    Vec2 center;
    double radius = 0.0;     ///< physical radius
    double influence = 0.0;  ///< repulsion radius d_o
};

enum class Variant { TAPF, IAPF, OAPF };

std::string_view variant_name(Variant v);   // "tapf" / "iapf" / "oapf"
std::string_view variant_label(Variant v);  // "T-APF" / "I-APF" / "O-APF"
std::optional<Variant> parse_variant(std::string_view text);

/// Temporary waypoint that replaces the true target while active.
struct SubGoal {
    Vec2 pos;
    std::size_t source_obstacle = 0;
    int created_step = 0;

    friend bool operator==(const SubGoal&, const SubGoal&) = default;
};

struct UavState {
    int id = 0;
    Vec2 pos;
    double heading = 0.0;  ///< direction of the most recent displacement
    Vec2 target;
    Vec2 start;
    std::optional<SubGoal> subgoal;  ///< empty: steering toward the true target
    bool arrived = false;
};

inline Vec2 active_goal_position(const UavState& u) {
    return u.subgoal ? u.subgoal->pos : u.target;
}

}  // namespace swarm_apf
