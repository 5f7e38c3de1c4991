#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swarm_apf/sim.hpp"

namespace swarm_apf {

/// compare() was handed runs of different scenario geometries.
class MismatchedScenarioError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

/// Heading changes strictly above this many degrees are counted.
inline constexpr double kHeadingChangeThresholdDeg = 5.0;

/// Closest two UAVs may come before counting as a collision.
inline constexpr double kCollisionRadius = 0.5;

struct UavMetrics {
    double path_length = 0.0;
    double straight_line = 0.0;  ///< start-to-target distance
    int angle_change_count = 0;
    double max_abs_turn_deg = 0.0;
    double min_inter_uav_dist = 0.0;      ///< +inf for a lone UAV
    double min_obstacle_clearance = 0.0;  ///< to the obstacle surface; +inf without obstacles
    double formation_rms_error = 0.0;     ///< RMS of (dist - d) over neighbor pairs within r
    std::optional<int> steps_to_arrival;
};

struct RunMetrics {
    Variant variant = Variant::OAPF;
    Outcome outcome = Outcome::StepLimit;
    std::string geometry;  ///< canonical text of starts, targets and obstacles
    std::vector<UavMetrics> per_uav;

    double path_length = 0.0;  ///< swarm total
    int angle_change_count = 0;
    double max_abs_turn_deg = 0.0;
    double min_inter_uav_dist = 0.0;
    double min_obstacle_clearance = 0.0;
    double formation_rms_error = 0.0;
    std::optional<int> steps_to_arrival;  ///< last arrival, if all arrived
};

/// Position history of every UAV, one polyline per UAV.
std::vector<std::vector<Vec2>> polylines(const TrajectoryLog& log);

double path_length(std::span<const Vec2> polyline);

/// Sum of path_length over every UAV.
double path_length(const TrajectoryLog& log);

/// Four-quadrant bearing of every non-zero displacement, degrees in (-180, 180].
std::vector<double> heading_series(std::span<const Vec2> polyline);

/// Number of consecutive heading pairs whose wrapped difference exceeds
/// threshold_deg in magnitude.
int angle_change_count(std::span<const double> headings_deg,
                       double threshold_deg = kHeadingChangeThresholdDeg);

/// Angle changes per UAV of a whole log.
std::vector<int> angle_change_count(const TrajectoryLog& log, double threshold_deg = kHeadingChangeThresholdDeg);

double max_abs_turn(std::span<const double> headings_deg);

std::string geometry_key(const Scenario& scenario);

RunMetrics compute_metrics(const TrajectoryLog& log, const Scenario& scenario);

struct ComparisonRow {
    Variant variant = Variant::TAPF;
    Outcome outcome = Outcome::StepLimit;
    double path_length = 0.0;
    int angle_changes = 0;
    double max_abs_turn_deg = 0.0;
    double min_inter_uav_dist = 0.0;
    double min_obstacle_clearance = 0.0;
    double formation_rms_error = 0.0;
    std::optional<int> steps_to_arrival;
    // Improvement over the T-APF row, in percent, under two conventions:
    // reduction = (T - X) / T, ratio = T / X - 1.
    double path_reduction_pct = 0.0;
    double angle_reduction_pct = 0.0;
    double path_ratio_pct = 0.0;
    double angle_ratio_pct = 0.0;
};

struct Comparison {
    std::vector<ComparisonRow> rows;
};

/// Tabulates runs of one scenario against its T-APF run. Throws
/// MismatchedScenarioError if geometries differ and SwarmError if no T-APF
/// run is present.
Comparison compare(std::span<const RunMetrics> runs);

/// Column names of the delimited comparison report, in order.
std::span<const std::string_view> comparison_columns();

std::string render_text(const Comparison& table);
std::string render_csv(const Comparison& table);

}  // namespace swarm_apf
