#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "swarm_apf/analytics.hpp"
#include "swarm_apf/sim.hpp"

namespace swarm_apf {

inline constexpr std::string_view kArtifactVersion = "swarm_apf 1.0.0";
inline constexpr std::string_view kTrajectoryFormat = "trajectory v1";

/// Malformed scenario text. what() carries "<source>:<line>: <message>".
class ParseError : public SwarmError {
public:
    ParseError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

/// Parses the sectioned scenario format:
///
///     [scenario]   name = ..., variant = tapf|iapf|oapf, seed = N
///     [params]     <SwarmParams field> = <number>
///     [uavs]       start_x start_y target_x target_y
///     [obstacles]  center_x center_y radius influence
///
/// '#' starts a comment. Missing params keep their defaults. Throws
/// ParseError for syntax problems and unknown keys, ValidationError when
/// the parsed scenario breaks an invariant.
Scenario parse_scenario(std::string_view text, const std::string& source = "<string>");

Scenario load_scenario(const std::filesystem::path& path);

/// Serializes every field, including all parameters, so that
/// parse_scenario(write_scenario(s)) reproduces s exactly.
std::string write_scenario(const Scenario& scenario);

/// '#'-prefixed provenance lines shared by every output artifact.
std::string artifact_header(std::string_view kind, const Scenario& scenario);

/// step,uav_id,x,y,heading_deg,goal_kind,risk_max,fx,fy; one row per
/// (recorded step, UAV).
std::string export_trajectory(const TrajectoryLog& log, const Scenario& scenario);

/// Per-UAV metric rows followed by a "swarm" aggregate row.
std::string export_metrics(const RunMetrics& metrics, const Scenario& scenario);

struct GeneratorOptions {
    std::uint64_t seed = 1;
    int uav_count = 5;
    int obstacle_count = 4;
    double radius_min = 0.6;
    double radius_max = 1.2;
    double influence_margin = 2.0;  ///< influence = radius + margin
    double corridor_length = 40.0;
    Variant variant = Variant::OAPF;
};

/// Line-abreast swarm at spacing d flying along +x, with obstacles placed
/// uniformly at random in the middle of the corridor. Deterministic for a
/// given seed. Throws SwarmError if the obstacles cannot be placed.
Scenario generate_scenario(const GeneratorOptions& options, const SwarmParams& params);

}  // namespace swarm_apf
