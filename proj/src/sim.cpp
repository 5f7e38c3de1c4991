#include "swarm_apf/sim.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "swarm_apf/formation.hpp"

namespace swarm_apf {

namespace {

UavRecord record_of(const UavState& u) {
    UavRecord rec;
    rec.pos = u.pos;
    rec.heading = u.heading;
    rec.subgoal = u.subgoal;
    rec.goal = u.subgoal ? GoalKind::SubGoal : GoalKind::TrueTarget;
    rec.arrived = u.arrived;
    return rec;
}

}  // namespace

void validate(const Scenario& s) {
    validate(s.params);
    const auto& p = s.params;
    if (s.uavs.empty()) throw ValidationError("scenario has no UAVs");
    for (std::size_t k = 0; k < s.obstacles.size(); ++k) {
        const auto& o = s.obstacles[k];
        if (!is_finite(o.center) || !std::isfinite(o.radius) || !std::isfinite(o.influence)) {
            throw ValidationError(fmt::format("obstacle {}: non-finite value", k));
        }
        if (!(o.radius > 0)) throw ValidationError(fmt::format("obstacle {}: radius must be > 0", k));
        if (!(o.influence > o.radius)) {
            throw ValidationError(fmt::format("obstacle {}: influence must exceed radius", k));
        }
    }
    for (std::size_t i = 0; i < s.uavs.size(); ++i) {
        const auto& u = s.uavs[i];
        if (!is_finite(u.start) || !is_finite(u.target)) {
            throw ValidationError(fmt::format("UAV {}: non-finite coordinate", i));
        }
        if (!(distance(u.start, u.target) > p.eps_len)) {
            throw DegenerateScenarioError(fmt::format("UAV {}: start coincides with target", i));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!(distance(u.start, s.uavs[j].start) > p.eps_len)) {
                throw ValidationError(fmt::format("UAVs {} and {} share a start position", j, i));
            }
        }
        for (std::size_t k = 0; k < s.obstacles.size(); ++k) {
            const auto& o = s.obstacles[k];
            if (distance(u.start, o.center) < o.radius) {
                throw ValidationError(fmt::format("UAV {}: start inside obstacle {}", i, k));
            }
            if (distance(u.target, o.center) < o.radius) {
                throw ValidationError(fmt::format("UAV {}: target inside obstacle {}", i, k));
            }
        }
    }
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Complete: return "Complete";
        case Outcome::StepLimit: return "StepLimit";
        case Outcome::NumericalError: return "NumericalError";
    }
    return "?";
}

SwarmState initial_state(const Scenario& scenario) {
    SwarmState state;
    state.reserve(scenario.uavs.size());
    for (std::size_t i = 0; i < scenario.uavs.size(); ++i) {
        const auto& spec = scenario.uavs[i];
        UavState u;
        u.id = static_cast<int>(i);
        u.pos = spec.start;
        u.start = spec.start;
        u.target = spec.target;
        u.heading = bearing(spec.target - spec.start);
        u.arrived = distance(spec.start, spec.target) <= scenario.params.goal_eps;
        state.push_back(u);
    }
    return state;
}

StepResult step(const SwarmState& state, const Scenario& scenario, int step_index) {
    const auto& params = scenario.params;
    const std::span<const Obstacle> obstacles = scenario.obstacles;
    StepResult out;
    out.state = state;
    out.row.reserve(state.size());

    for (std::size_t i = 0; i < state.size(); ++i) {
        const UavState& u = state[i];
        UavState& next = out.state[i];
        if (u.arrived) {
            UavRecord rec = record_of(u);
            rec.repulsion.assign(obstacles.size(), Vec2{});
            out.row.push_back(std::move(rec));
            continue;
        }

        std::vector<RiskAssessment> assessments;
        for (const auto& det : sense(u, obstacles, params)) {
            assessments.push_back(assess_risk(u, obstacles[det.index], det, params));
        }
        double risk_max = 0.0;
        for (const auto& a : assessments) risk_max = std::max(risk_max, a.risk);

        if (scenario.variant != Variant::TAPF) {
            next.subgoal = update_goal(u, assessments, obstacles, step_index, params);
        }

        const Vec2 attract = attract_dispatch(next, scenario.variant, params);
        std::vector<Vec2> repulsion(obstacles.size());
        Vec2 repulse_total;
        for (std::size_t k = 0; k < obstacles.size(); ++k) {
            if (scenario.variant != Variant::TAPF && !repulsion_active(k, next.subgoal, assessments, params)) {
                continue;
            }
            repulsion[k] = rep_force(u.pos, obstacles[k], params);
            repulse_total += repulsion[k];
        }
        const Vec2 formation = formation_force(neighbors(u, state, params), params);
        const ForceBreakdown forces = combine(attract, repulse_total, formation);

        if (norm(forces.resultant) > params.eps_len) {
            const Vec2 dir = unit(forces.resultant, params.eps_len);
            next.pos = u.pos + params.step_len * dir;
            next.heading = bearing(dir);
        }
        if (distance(next.pos, next.target) <= params.goal_eps) {
            next.arrived = true;
            next.subgoal.reset();
        }
        if (!is_finite(next.pos) || !is_finite(forces.resultant)) out.numerical_error = true;

        UavRecord rec = record_of(next);
        rec.forces = forces;
        rec.risk_max = risk_max;
        rec.repulsion = std::move(repulsion);
        out.row.push_back(std::move(rec));
    }
    return out;
}

TrajectoryLog run(const Scenario& scenario) {
    validate(scenario);
    TrajectoryLog log;
    SwarmState state = initial_state(scenario);
    {
        std::vector<UavRecord> row;
        for (const auto& u : state) {
            UavRecord rec = record_of(u);
            rec.repulsion.assign(scenario.obstacles.size(), Vec2{});
            row.push_back(std::move(rec));
        }
        log.rows.push_back(std::move(row));
    }
    auto all_arrived = [&] {
        return std::all_of(state.begin(), state.end(), [](const UavState& u) { return u.arrived; });
    };
    for (int k = 1; k <= scenario.params.max_steps && !all_arrived(); ++k) {
        StepResult res;
        try {
            res = step(state, scenario, k);
        } catch (const SwarmError& e) {
            log.outcome = Outcome::NumericalError;
            log.diagnostic = fmt::format("step {}: {}", k, e.what());
            return log;
        }
        log.rows.push_back(std::move(res.row));
        state = std::move(res.state);
        if (res.numerical_error) {
            log.outcome = Outcome::NumericalError;
            log.diagnostic = fmt::format("step {}: non-finite position or force", k);
            return log;
        }
    }
    log.outcome = all_arrived() ? Outcome::Complete : Outcome::StepLimit;
    if (log.outcome == Outcome::StepLimit) {
        log.diagnostic = fmt::format("step limit {} reached", scenario.params.max_steps);
    }
    return log;
}

}  // namespace swarm_apf
