#include "swarm_apf/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace swarm_apf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v, int precision) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.{}f}", v, precision);
}

std::string format_steps(const std::optional<int>& s) { return s ? std::to_string(*s) : "-"; }

}  // namespace

std::vector<std::vector<Vec2>> polylines(const TrajectoryLog& log) {
    std::vector<std::vector<Vec2>> out(log.uav_count());
    for (auto& line : out) line.reserve(log.rows.size());
    for (const auto& row : log.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out[i].push_back(row[i].pos);
    }
    return out;
}

double path_length(std::span<const Vec2> polyline) {
    double total = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) total += distance(polyline[i - 1], polyline[i]);
    return total;
}

double path_length(const TrajectoryLog& log) {
    double total = 0.0;
    for (const auto& line : polylines(log)) total += path_length(line);
    return total;
}

std::vector<double> heading_series(std::span<const Vec2> polyline) {
    std::vector<double> out;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        const Vec2 delta = polyline[i] - polyline[i - 1];
        if (delta.x == 0.0 && delta.y == 0.0) continue;  // stationary: no heading sample
        out.push_back(wrap_degrees(rad_to_deg(bearing(delta))));
    }
    return out;
}

int angle_change_count(std::span<const double> headings_deg, double threshold_deg) {
    int count = 0;
    for (std::size_t i = 1; i < headings_deg.size(); ++i) {
        if (std::abs(wrap_degrees(headings_deg[i] - headings_deg[i - 1])) > threshold_deg) ++count;
    }
    return count;
}

std::vector<int> angle_change_count(const TrajectoryLog& log, double threshold_deg) {
    std::vector<int> out;
    for (const auto& line : polylines(log)) out.push_back(angle_change_count(heading_series(line), threshold_deg));
    return out;
}

double max_abs_turn(std::span<const double> headings_deg) {
    double worst = 0.0;
    for (std::size_t i = 1; i < headings_deg.size(); ++i) {
        worst = std::max(worst, std::abs(wrap_degrees(headings_deg[i] - headings_deg[i - 1])));
    }
    return worst;
}

std::string geometry_key(const Scenario& scenario) {
    std::string key;
    for (const auto& u : scenario.uavs) {
        key += fmt::format("u:{},{},{},{};", u.start.x, u.start.y, u.target.x, u.target.y);
    }
    for (const auto& o : scenario.obstacles) {
        key += fmt::format("o:{},{},{},{};", o.center.x, o.center.y, o.radius, o.influence);
    }
    return key;
}

RunMetrics compute_metrics(const TrajectoryLog& log, const Scenario& scenario) {
    RunMetrics m;
    m.variant = scenario.variant;
    m.outcome = log.outcome;
    m.geometry = geometry_key(scenario);

    const auto lines = polylines(log);
    const std::size_t n = lines.size();
    const double d = scenario.params.d;
    const double r = scenario.params.r;
    m.per_uav.resize(n);

    std::vector<double> sq_err(n, 0.0);
    std::vector<std::size_t> pair_samples(n, 0);
    double total_sq = 0.0;
    std::size_t total_pairs = 0;
    for (auto& u : m.per_uav) {
        u.min_inter_uav_dist = kInf;
        u.min_obstacle_clearance = kInf;
    }

    for (std::size_t step = 0; step < log.rows.size(); ++step) {
        const auto& row = log.rows[step];
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& o : scenario.obstacles) {
                m.per_uav[i].min_obstacle_clearance =
                    std::min(m.per_uav[i].min_obstacle_clearance, distance(row[i].pos, o.center) - o.radius);
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dist = distance(row[i].pos, row[j].pos);
                m.per_uav[i].min_inter_uav_dist = std::min(m.per_uav[i].min_inter_uav_dist, dist);
                m.per_uav[j].min_inter_uav_dist = std::min(m.per_uav[j].min_inter_uav_dist, dist);
                if (dist < r) {
                    const double e = (dist - d) * (dist - d);
                    sq_err[i] += e;
                    sq_err[j] += e;
                    ++pair_samples[i];
                    ++pair_samples[j];
                    total_sq += e;
                    ++total_pairs;
                }
            }
            if (row[i].arrived && !m.per_uav[i].steps_to_arrival) {
                m.per_uav[i].steps_to_arrival = static_cast<int>(step);
            }
        }
    }

    m.min_inter_uav_dist = kInf;
    m.min_obstacle_clearance = kInf;
    bool all_arrived = true;
    int last_arrival = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& u = m.per_uav[i];
        const auto headings = heading_series(lines[i]);
        u.path_length = path_length(lines[i]);
        u.straight_line = distance(scenario.uavs[i].start, scenario.uavs[i].target);
        u.angle_change_count = angle_change_count(headings);
        u.max_abs_turn_deg = max_abs_turn(headings);
        u.formation_rms_error = pair_samples[i] ? std::sqrt(sq_err[i] / static_cast<double>(pair_samples[i])) : 0.0;

        m.path_length += u.path_length;
        m.angle_change_count += u.angle_change_count;
        m.max_abs_turn_deg = std::max(m.max_abs_turn_deg, u.max_abs_turn_deg);
        m.min_inter_uav_dist = std::min(m.min_inter_uav_dist, u.min_inter_uav_dist);
        m.min_obstacle_clearance = std::min(m.min_obstacle_clearance, u.min_obstacle_clearance);
        if (u.steps_to_arrival) {
            last_arrival = std::max(last_arrival, *u.steps_to_arrival);
        } else {
            all_arrived = false;
        }
    }
    m.formation_rms_error = total_pairs ? std::sqrt(total_sq / static_cast<double>(total_pairs)) : 0.0;
    if (all_arrived) m.steps_to_arrival = last_arrival;
    return m;
}

Comparison compare(std::span<const RunMetrics> runs) {
    if (runs.empty()) throw SwarmError("compare: no runs given");
    for (const auto& run : runs) {
        if (run.geometry != runs.front().geometry) {
            throw MismatchedScenarioError("compare: runs come from different scenario geometries");
        }
    }
    const auto base = std::find_if(runs.begin(), runs.end(),
                                   [](const RunMetrics& r) { return r.variant == Variant::TAPF; });
    if (base == runs.end()) throw SwarmError("compare: a T-APF baseline run is required");

    auto reduction = [](double t, double x) { return t == 0.0 ? 0.0 : 100.0 * (t - x) / t; };
    auto ratio = [](double t, double x) {
        if (x == 0.0) return t == 0.0 ? 0.0 : kInf;
        return 100.0 * (t / x - 1.0);
    };

    Comparison out;
    for (const auto& run : runs) {
        ComparisonRow row;
        row.variant = run.variant;
        row.outcome = run.outcome;
        row.path_length = run.path_length;
        row.angle_changes = run.angle_change_count;
        row.max_abs_turn_deg = run.max_abs_turn_deg;
        row.min_inter_uav_dist = run.min_inter_uav_dist;
        row.min_obstacle_clearance = run.min_obstacle_clearance;
        row.formation_rms_error = run.formation_rms_error;
        row.steps_to_arrival = run.steps_to_arrival;
        const double t_len = base->path_length;
        const double t_chg = base->angle_change_count;
        row.path_reduction_pct = reduction(t_len, run.path_length);
        row.angle_reduction_pct = reduction(t_chg, run.angle_change_count);
        row.path_ratio_pct = ratio(t_len, run.path_length);
        row.angle_ratio_pct = ratio(t_chg, run.angle_change_count);
        out.rows.push_back(row);
    }
    return out;
}

std::span<const std::string_view> comparison_columns() {
    static constexpr std::array<std::string_view, 13> kColumns{
        "variant",         "outcome",         "path_length_m",      "angle_changes",  "path_reduction_pct",
        "angle_reduction_pct", "path_ratio_pct", "angle_ratio_pct", "max_turn_deg", "min_inter_uav_m",
        "min_clearance_m", "formation_rms_m", "arrival_step"};
    return kColumns;
}

std::string render_csv(const Comparison& table) {
    std::string out;
    const auto cols = comparison_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const auto& r : table.rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", variant_label(r.variant),
                           outcome_name(r.outcome), format_number(r.path_length, 4), r.angle_changes,
                           format_number(r.path_reduction_pct, 2), format_number(r.angle_reduction_pct, 2),
                           format_number(r.path_ratio_pct, 2), format_number(r.angle_ratio_pct, 2),
                           format_number(r.max_abs_turn_deg, 3), format_number(r.min_inter_uav_dist, 4),
                           format_number(r.min_obstacle_clearance, 4), format_number(r.formation_rms_error, 4),
                           format_steps(r.steps_to_arrival));
    }
    return out;
}

std::string render_text(const Comparison& table) {
    std::string out;
    out += "Rate columns are improvements over T-APF:\n";
    out += "  reduction = (T - X) / T     ratio = T / X - 1\n\n";
    out += fmt::format("{:<8} {:>10} {:>14} {:>12} {:>10} {:>14} {:>12} {:>10} {:>9} {:>10} {:>10} {:>8}\n",
                       "Variant", "Outcome", "PathLength[m]", "Reduction", "Ratio", "AngleChange[N]", "Reduction",
                       "Ratio", "MaxTurn", "MinSep[m]", "MinClr[m]", "Steps");
    for (const auto& r : table.rows) {
        out += fmt::format("{:<8} {:>10} {:>14} {:>11}% {:>9}% {:>14} {:>11}% {:>9}% {:>9} {:>10} {:>10} {:>8}\n",
                           variant_label(r.variant), outcome_name(r.outcome), format_number(r.path_length, 2),
                           format_number(r.path_reduction_pct, 1), format_number(r.path_ratio_pct, 1),
                           r.angle_changes, format_number(r.angle_reduction_pct, 1),
                           format_number(r.angle_ratio_pct, 1), format_number(r.max_abs_turn_deg, 1),
                           format_number(r.min_inter_uav_dist, 2), format_number(r.min_obstacle_clearance, 2),
                           format_steps(r.steps_to_arrival));
    }
    return out;
}

}  // namespace swarm_apf
