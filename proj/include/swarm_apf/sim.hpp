#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarm_apf/avoidance.hpp"
#include "swarm_apf/potential_fields.hpp"

namespace swarm_apf {

/// Start/target pair of one UAV.
struct UavSpec {
    Vec2 start;
    Vec2 target;
};

struct Scenario {
    std::string name = "scenario";
    std::vector<UavSpec> uavs;
    std::vector<Obstacle> obstacles;
    SwarmParams params;
    Variant variant = Variant::OAPF;
    std::uint64_t seed = 0;  ///< consumed by scenario generators only
};

/// Throws ValidationError / DegenerateScenarioError on the first problem.
void validate(const Scenario& scenario);

enum class GoalKind { TrueTarget, SubGoal };

/// State of one UAV after a step, plus what acted on it.
struct UavRecord {
    Vec2 pos;
    double heading = 0.0;
    ForceBreakdown forces;
    GoalKind goal = GoalKind::TrueTarget;
    std::optional<SubGoal> subgoal;
    double risk_max = 0.0;
    bool arrived = false;
    std::vector<Vec2> repulsion;  ///< per-obstacle contribution to repulse_total
};

enum class Outcome { Complete, StepLimit, NumericalError };

std::string_view outcome_name(Outcome o);

/// One row per recorded step; row 0 is the initial configuration.
struct TrajectoryLog {
    std::vector<std::vector<UavRecord>> rows;
    Outcome outcome = Outcome::StepLimit;
    std::string diagnostic;

    std::size_t uav_count() const { return rows.empty() ? 0 : rows.front().size(); }
    /// Number of motion steps taken (rows minus the initial one).
    std::size_t steps() const { return rows.empty() ? 0 : rows.size() - 1; }
};

using SwarmState = std::vector<UavState>;

/// UAVs at their starts, heading toward their targets.
SwarmState initial_state(const Scenario& scenario);

struct StepResult {
    SwarmState state;
    std::vector<UavRecord> row;
    bool numerical_error = false;
};

/// Advances every non-arrived UAV by one step against a frozen snapshot of
/// `state`. `step_index` is the index of the row being produced (>= 1).
StepResult step(const SwarmState& state, const Scenario& scenario, int step_index);

/// Steps until every UAV has arrived or params.max_steps is hit.
TrajectoryLog run(const Scenario& scenario);

}  // namespace swarm_apf
