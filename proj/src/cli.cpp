#include "swarm_apf/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swarm_apf/analytics.hpp"
#include "swarm_apf/scenario_io.hpp"

namespace swarm_apf {

namespace {

namespace fs = std::filesystem;

/// Flags shared by `run` and `compare`.
struct RunFlags {
    std::string scenario;
    std::string out_dir = ".";
    std::optional<int> max_steps;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> params;
};

class UsageError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags) {
    cmd.add_option("--scenario", flags.scenario, "Scenario file")->required();
    cmd.add_option("--out", flags.out_dir, "Output directory");
    cmd.add_option("--max-steps", flags.max_steps, "Override max_steps");
    cmd.add_option("--seed", flags.seed, "Override the scenario seed");
    cmd.add_option("--param", flags.params, "Override a parameter, key=value (repeatable)");
}

void apply_param_overrides(SwarmParams& params, const std::vector<std::string>& overrides) {
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError(fmt::format("--param expects key=value, got '{}'", kv));
        const std::string key = kv.substr(0, eq);
        const std::string text = kv.substr(eq + 1);
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size()) throw UsageError(fmt::format("--param {}: '{}' is not a number", key, text));
        if (!set_param(params, key, value)) throw UsageError(fmt::format("--param: unknown parameter '{}'", key));
    }
}

Scenario prepare(const RunFlags& flags) {
    Scenario s = load_scenario(flags.scenario);
    apply_param_overrides(s.params, flags.params);
    if (flags.max_steps) s.params.max_steps = *flags.max_steps;
    if (flags.seed) s.seed = *flags.seed;
    validate(s);
    return s;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError(fmt::format("cannot write '{}'", path.string()));
    f << content;
    if (!f) throw UsageError(fmt::format("failed writing '{}'", path.string()));
}

fs::path ensure_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw UsageError(fmt::format("cannot create output directory '{}': {}", dir, ec.message()));
    return p;
}

int exit_code(Outcome o) {
    switch (o) {
        case Outcome::Complete: return kExitComplete;
        case Outcome::StepLimit: return kExitStepLimit;
        case Outcome::NumericalError: return kExitNumerical;
    }
    return kExitNumerical;
}

struct VariantRun {
    Scenario scenario;
    TrajectoryLog log;
    RunMetrics metrics;
};

VariantRun execute(Scenario scenario) {
    VariantRun r{std::move(scenario), {}, {}};
    r.log = run(r.scenario);
    r.metrics = compute_metrics(r.log, r.scenario);
    return r;
}

std::string run_stem(const Scenario& s) { return fmt::format("{}_{}", s.name, variant_name(s.variant)); }

void write_run_outputs(const fs::path& dir, const VariantRun& r) {
    write_file(dir / (run_stem(r.scenario) + "_trajectory.csv"), export_trajectory(r.log, r.scenario));
    write_file(dir / (run_stem(r.scenario) + "_metrics.csv"), export_metrics(r.metrics, r.scenario));
}

int cmd_run(const RunFlags& flags, const std::optional<std::string>& variant_text, std::ostream& out,
            std::ostream& err) {
    Scenario s = prepare(flags);
    if (variant_text) {
        const auto v = parse_variant(*variant_text);
        if (!v) throw UsageError(fmt::format("unknown variant '{}' (expected tapf, iapf or oapf)", *variant_text));
        s.variant = *v;
    }
    const auto dir = ensure_dir(flags.out_dir);
    const VariantRun r = execute(std::move(s));
    write_run_outputs(dir, r);
    out << export_metrics(r.metrics, r.scenario);
    if (r.log.outcome != Outcome::Complete) err << "swarm_apf: " << r.log.diagnostic << '\n';
    return exit_code(r.log.outcome);
}

int cmd_compare(const RunFlags& flags, std::ostream& out, std::ostream& err) {
    const Scenario base = prepare(flags);
    const auto dir = ensure_dir(flags.out_dir);

    std::vector<std::future<VariantRun>> jobs;
    for (Variant v : {Variant::TAPF, Variant::IAPF, Variant::OAPF}) {
        Scenario s = base;
        s.variant = v;
        jobs.push_back(std::async(std::launch::async, execute, std::move(s)));
    }
    std::vector<VariantRun> runs;
    for (auto& job : jobs) runs.push_back(job.get());

    std::vector<RunMetrics> metrics;
    int code = kExitComplete;
    for (const auto& r : runs) {
        write_run_outputs(dir, r);
        metrics.push_back(r.metrics);
        if (r.log.outcome != Outcome::Complete) {
            err << fmt::format("swarm_apf: {}: {}\n", variant_label(r.scenario.variant), r.log.diagnostic);
            code = std::max(code, exit_code(r.log.outcome));
        }
    }
    const Comparison table = compare(metrics);
    const std::string header = artifact_header("comparison v1", base);
    const std::string text = render_text(table);
    write_file(dir / (base.name + "_comparison.txt"), header + text);
    write_file(dir / (base.name + "_comparison.csv"), header + render_csv(table));
    out << text;
    return code;
}

struct GenFlags {
    GeneratorOptions options;
    std::string variant = "oapf";
    std::string out_file;
    std::vector<std::string> params;
};

int cmd_gen(const GenFlags& flags, std::ostream& out) {
    GeneratorOptions opt = flags.options;
    const auto v = parse_variant(flags.variant);
    if (!v) throw UsageError(fmt::format("unknown variant '{}'", flags.variant));
    opt.variant = *v;
    SwarmParams params;
    apply_param_overrides(params, flags.params);
    const Scenario s = generate_scenario(opt, params);
    const std::string text = write_scenario(s);
    if (flags.out_file.empty()) {
        out << text;
    } else {
        write_file(flags.out_file, text);
    }
    return kExitComplete;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-UAV potential-field swarm planner: run, compare and generate scenarios", "swarm_apf"};
    app.require_subcommand(1);

    RunFlags run_flags;
    std::optional<std::string> variant_text;
    auto* run_cmd = app.add_subcommand("run", "Run one scenario with one planner variant");
    add_run_flags(*run_cmd, run_flags);
    run_cmd->add_option("--variant", variant_text, "tapf | iapf | oapf (default: scenario file)");

    RunFlags compare_flags;
    auto* compare_cmd = app.add_subcommand("compare", "Run T-APF, I-APF and O-APF on one scenario and tabulate");
    add_run_flags(*compare_cmd, compare_flags);

    GenFlags gen_flags;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random scenario");
    gen_cmd->add_option("--seed", gen_flags.options.seed, "Random seed");
    gen_cmd->add_option("--uavs", gen_flags.options.uav_count, "Swarm size");
    gen_cmd->add_option("--obstacles", gen_flags.options.obstacle_count, "Obstacle count");
    gen_cmd->add_option("--radius-min", gen_flags.options.radius_min, "Smallest obstacle radius");
    gen_cmd->add_option("--radius-max", gen_flags.options.radius_max, "Largest obstacle radius");
    gen_cmd->add_option("--influence-margin", gen_flags.options.influence_margin, "Influence radius minus radius");
    gen_cmd->add_option("--length", gen_flags.options.corridor_length, "Start-to-target distance");
    gen_cmd->add_option("--variant", gen_flags.variant, "Variant recorded in the file");
    gen_cmd->add_option("--param", gen_flags.params, "Override a parameter, key=value (repeatable)");
    gen_cmd->add_option("--out", gen_flags.out_file, "Output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_flags, variant_text, out, err);
        if (*compare_cmd) return cmd_compare(compare_flags, out, err);
        if (*gen_cmd) return cmd_gen(gen_flags, out);
    } catch (const ParseError& e) {
        err << "swarm_apf: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        err << "swarm_apf: validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DegenerateScenarioError& e) {
        err << "swarm_apf: validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const UsageError& e) {
        err << "swarm_apf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SwarmError& e) {
        err << "swarm_apf: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace swarm_apf
