#include "swarm_apf/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace swarm_apf {

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : SwarmError(fmt::format("{}:{}: {}", source, line, message)), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
    double value = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

enum class Section { None, Scenario, Params, Uavs, Obstacles };

std::string fmt_double(double v) { return fmt::format("{}", v); }

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source) {
    Scenario s;
    Section section = Section::None;
    std::set<std::string, std::less<>> seen_keys;
    int line_no = 0;

    auto fail = [&](const std::string& msg) -> void { throw ParseError(source, line_no, msg); };

    auto numbers = [&](std::string_view body, std::size_t expected) {
        const auto fields = split_fields(body);
        if (fields.size() != expected) {
            fail(fmt::format("expected {} numbers, found {}", expected, fields.size()));
        }
        std::vector<double> out;
        for (const auto f : fields) {
            const auto v = parse_double(f);
            if (!v) fail(fmt::format("'{}' is not a number", f));
            out.push_back(*v);
        }
        return out;
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            const auto name = trim(line.substr(1, line.size() - 2));
            if (name == "scenario") section = Section::Scenario;
            else if (name == "params") section = Section::Params;
            else if (name == "uavs") section = Section::Uavs;
            else if (name == "obstacles") section = Section::Obstacles;
            else fail(fmt::format("unknown section [{}]", name));
            continue;
        }

        switch (section) {
            case Section::None:
                fail("content before the first section header");
                break;
            case Section::Scenario:
            case Section::Params: {
                const auto eq = line.find('=');
                if (eq == std::string_view::npos) fail("expected 'key = value'");
                const auto key = trim(line.substr(0, eq));
                const auto value = trim(line.substr(eq + 1));
                if (key.empty() || value.empty()) fail("expected 'key = value'");
                const std::string qualified = fmt::format("{}.{}", section == Section::Params ? "params" : "scenario", key);
                if (!seen_keys.insert(qualified).second) fail(fmt::format("duplicate key '{}'", key));
                if (section == Section::Scenario) {
                    if (key == "name") {
                        s.name = std::string(value);
                    } else if (key == "variant") {
                        const auto v = parse_variant(value);
                        if (!v) fail(fmt::format("unknown variant '{}'", value));
                        s.variant = *v;
                    } else if (key == "seed") {
                        std::uint64_t seed = 0;
                        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
                        if (ec != std::errc{} || ptr != value.data() + value.size()) fail("seed must be a non-negative integer");
                        s.seed = seed;
                    } else {
                        fail(fmt::format("unknown scenario key '{}'", key));
                    }
                } else {
                    const auto v = parse_double(value);
                    if (!v) fail(fmt::format("'{}' is not a number", value));
                    bool known = false;
                    try {
                        known = set_param(s.params, key, *v);
                    } catch (const ValidationError& e) {
                        throw ValidationError(fmt::format("{}:{}: {}", source, line_no, e.what()));
                    }
                    if (!known) fail(fmt::format("unknown parameter '{}'", key));
                }
                break;
            }
            case Section::Uavs: {
                const auto v = numbers(line, 4);
                s.uavs.push_back({{v[0], v[1]}, {v[2], v[3]}});
                break;
            }
            case Section::Obstacles: {
                const auto v = numbers(line, 4);
                const Obstacle o{{v[0], v[1]}, v[2], v[3]};
                if (!(o.radius > 0)) {
                    throw ValidationError(fmt::format("{}:{}: obstacle radius must be > 0", source, line_no));
                }
                if (!(o.influence > o.radius)) {
                    throw ValidationError(
                        fmt::format("{}:{}: obstacle influence must exceed its radius", source, line_no));
                }
                s.obstacles.push_back(o);
                break;
            }
        }
    }

    try {
        validate(s);
    } catch (const SwarmError& e) {
        throw ValidationError(fmt::format("{}: {}", source, e.what()));
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SwarmError(fmt::format("cannot open scenario file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

std::string write_scenario(const Scenario& s) {
    std::string out = fmt::format("# {} scenario\n\n[scenario]\n", kArtifactVersion);
    out += fmt::format("name = {}\nvariant = {}\nseed = {}\n\n[params]\n", s.name, variant_name(s.variant), s.seed);
    for (const auto& [key, value] : param_entries(s.params)) out += fmt::format("{} = {}\n", key, value);
    out += "\n[uavs]\n# start_x start_y target_x target_y\n";
    for (const auto& u : s.uavs) {
        out += fmt::format("{} {} {} {}\n", fmt_double(u.start.x), fmt_double(u.start.y), fmt_double(u.target.x),
                           fmt_double(u.target.y));
    }
    out += "\n[obstacles]\n# center_x center_y radius influence\n";
    for (const auto& o : s.obstacles) {
        out += fmt::format("{} {} {} {}\n", fmt_double(o.center.x), fmt_double(o.center.y), fmt_double(o.radius),
                           fmt_double(o.influence));
    }
    return out;
}

std::string artifact_header(std::string_view kind, const Scenario& scenario) {
    return fmt::format("# {} {}\n# scenario={}\n# variant={}\n# params={}\n", kArtifactVersion, kind, scenario.name,
                       variant_name(scenario.variant), params_signature(scenario.params));
}

std::string export_trajectory(const TrajectoryLog& log, const Scenario& scenario) {
    std::string out = artifact_header(kTrajectoryFormat, scenario);
    out += fmt::format("# outcome={} steps={}\n", outcome_name(log.outcome), log.steps());
    out += "step,uav_id,x,y,heading_deg,goal_kind,risk_max,fx,fy\n";
    for (std::size_t k = 0; k < log.rows.size(); ++k) {
        const auto& row = log.rows[k];
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto& r = row[i];
            out += fmt::format("{},{},{:.6f},{:.6f},{:.6f},{},{:.6f},{:.6f},{:.6f}\n", k, i, r.pos.x, r.pos.y,
                               rad_to_deg(r.heading), r.goal == GoalKind::SubGoal ? "subgoal" : "target", r.risk_max,
                               r.forces.resultant.x, r.forces.resultant.y);
        }
    }
    return out;
}

std::string export_metrics(const RunMetrics& m, const Scenario& scenario) {
    std::string out = artifact_header("metrics v1", scenario);
    out += fmt::format("# outcome={}\n", outcome_name(m.outcome));
    out += "uav_id,path_length_m,straight_line_m,angle_changes,max_turn_deg,min_inter_uav_m,min_clearance_m,"
           "formation_rms_m,arrival_step\n";
    auto steps = [](const std::optional<int>& s) { return s ? std::to_string(*s) : std::string("-"); };
    double straight_total = 0.0;
    for (std::size_t i = 0; i < m.per_uav.size(); ++i) {
        const auto& u = m.per_uav[i];
        straight_total += u.straight_line;
        out += fmt::format("{},{:.4f},{:.4f},{},{:.3f},{:.4f},{:.4f},{:.4f},{}\n", i, u.path_length, u.straight_line,
                           u.angle_change_count, u.max_abs_turn_deg, u.min_inter_uav_dist, u.min_obstacle_clearance,
                           u.formation_rms_error, steps(u.steps_to_arrival));
    }
    out += fmt::format("swarm,{:.4f},{:.4f},{},{:.3f},{:.4f},{:.4f},{:.4f},{}\n", m.path_length, straight_total,
                       m.angle_change_count, m.max_abs_turn_deg, m.min_inter_uav_dist, m.min_obstacle_clearance,
                       m.formation_rms_error, steps(m.steps_to_arrival));
    return out;
}

Scenario generate_scenario(const GeneratorOptions& opt, const SwarmParams& params) {
    validate(params);
    if (opt.uav_count < 1) throw ValidationError("gen: at least one UAV is required");
    if (opt.obstacle_count < 0) throw ValidationError("gen: obstacle count must be >= 0");
    if (!(opt.radius_min > 0) || opt.radius_max < opt.radius_min) {
        throw ValidationError("gen: need 0 < radius_min <= radius_max");
    }
    if (!(opt.influence_margin > 0)) throw ValidationError("gen: influence margin must be > 0");
    if (!(opt.corridor_length > 0)) throw ValidationError("gen: corridor length must be > 0");

    Scenario s;
    s.name = fmt::format("generated_seed{}", opt.seed);
    s.params = params;
    s.variant = opt.variant;
    s.seed = opt.seed;

    const double half_span = 0.5 * (opt.uav_count - 1) * params.d;
    for (int i = 0; i < opt.uav_count; ++i) {
        const double y = i * params.d - half_span;
        s.uavs.push_back({{0.0, y}, {opt.corridor_length, y}});
    }

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> xs(0.3 * opt.corridor_length, 0.7 * opt.corridor_length);
    std::uniform_real_distribution<double> ys(-half_span - 0.5 * params.d, half_span + 0.5 * params.d);
    std::uniform_real_distribution<double> radii(opt.radius_min, opt.radius_max);

    constexpr int kMaxAttempts = 10000;
    int attempts = 0;
    while (static_cast<int>(s.obstacles.size()) < opt.obstacle_count) {
        if (++attempts > kMaxAttempts) {
            throw SwarmError(fmt::format("gen: could not place {} obstacles without overlap", opt.obstacle_count));
        }
        const double radius = radii(rng);
        const Obstacle o{{xs(rng), ys(rng)}, radius, radius + opt.influence_margin};
        bool clear = true;
        for (const auto& other : s.obstacles) {
            if (distance(o.center, other.center) < o.influence + other.influence) clear = false;
        }
        for (const auto& u : s.uavs) {
            if (distance(o.center, u.start) < o.influence + 1.0 || distance(o.center, u.target) < o.influence + 1.0) {
                clear = false;
            }
        }
        if (clear) s.obstacles.push_back(o);
    }
    validate(s);
    return s;
}

}  // namespace swarm_apf
