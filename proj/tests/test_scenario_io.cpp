#include <doctest.h>

#include <sstream>
#include <string>

#include "swarm_apf/scenario_io.hpp"

using namespace swarm_apf;
using doctest::Approx;

namespace {

constexpr const char* kMinimal = R"(# minimal
[uavs]
0 0 10 0
0 4 10 4
[obstacles]
5 8 1 2.5
)";

int count_lines(const std::string& s, const std::string& prefix) {
    std::istringstream in(s);
    int n = 0;
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

template <class Fn>
int parse_error_line(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("defaults are applied for missing params") {
    const auto s = parse_scenario(kMinimal);
    CHECK(s.uavs.size() == 2);
    CHECK(s.obstacles.size() == 1);
    CHECK(s.params.r == 6.0);
    CHECK(s.params.d == 4.0);
    CHECK(s.params.k_rep == 500.0);
    CHECK(s.variant == Variant::OAPF);
    const auto header = artifact_header("metrics", s);
    CHECK(header.find(std::string(kArtifactVersion)) != std::string::npos);
    CHECK(header.find(params_signature(s.params)) != std::string::npos);
    CHECK(header.find("r=6;d=4;phi=0.7") != std::string::npos);
}

TEST_CASE("write/parse round trip") {
    Scenario s = parse_scenario(kMinimal);
    s.name = "trip";
    s.seed = 42;
    s.variant = Variant::IAPF;
    s.params.step_len = 0.1 + 0.2;
    s.params.k_max = 3;
    s.obstacles[0].influence = 2.0 / 3.0 + 1.0;
    const auto back = parse_scenario(write_scenario(s));
    CHECK(back.name == s.name);
    CHECK(back.seed == 42);
    CHECK(back.variant == s.variant);
    CHECK(params_signature(back.params) == params_signature(s.params));
    CHECK(back.params.step_len == s.params.step_len);
    REQUIRE(back.uavs.size() == s.uavs.size());
    for (std::size_t i = 0; i < s.uavs.size(); ++i) {
        CHECK(back.uavs[i].start == s.uavs[i].start);
        CHECK(back.uavs[i].target == s.uavs[i].target);
    }
    CHECK(back.obstacles[0].influence == s.obstacles[0].influence);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line([] { parse_scenario("[uavs]\n0 0 1 1\n[bogus]\n"); }) == 3);
    CHECK(parse_error_line([] { parse_scenario("[params]\nr = 6\nnot_a_param = 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_scenario("[params]\nr = 6\nr = 7\n"); }) == 3);
    CHECK(parse_error_line([] { parse_scenario("[uavs]\n0 0 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_scenario("[uavs]\n0 0 x 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_scenario("r = 1\n"); }) == 1);
    CHECK(parse_error_line([] { parse_scenario("[scenario]\nvariant = fastest\n"); }) == 2);
    try {
        parse_scenario("[params]\nzzz = 1\n", "demo.scn");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("demo.scn:2") != std::string::npos);
    }
}

TEST_CASE("validation errors name the invariant") {
    try {
        parse_scenario("[params]\nphi = 5\n[uavs]\n0 0 10 0\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("phi < d") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_scenario("[uavs]\n0 0 10 0\n[obstacles]\n5 5 2 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_scenario("[uavs]\n0 0 0 0\n"), ValidationError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/file.scn"), SwarmError);
}

TEST_CASE("trajectory export layout") {
    const auto s = parse_scenario(kMinimal);
    const auto log = run(s);
    const auto text = export_trajectory(log, s);
    CHECK(text.find("step,uav_id,x,y,heading_deg,goal_kind,risk_max,fx,fy") != std::string::npos);
    CHECK(text.find(std::string(kTrajectoryFormat)) != std::string::npos);
    CHECK(text.find(params_signature(s.params)) != std::string::npos);
    const int rows = count_lines(text, "") - count_lines(text, "#") - 1;
    CHECK(rows == static_cast<int>((log.steps() + 1) * log.uav_count()));

    const auto metrics = export_metrics(compute_metrics(log, s), s);
    CHECK(metrics.find(std::string(kArtifactVersion)) != std::string::npos);
    CHECK(metrics.find("\nswarm,") != std::string::npos);
}

TEST_CASE("generator is deterministic and valid") {
    GeneratorOptions o;
    o.seed = 9;
    const SwarmParams p;
    const auto a = generate_scenario(o, p);
    const auto b = generate_scenario(o, p);
    CHECK(write_scenario(a) == write_scenario(b));
    CHECK(a.uavs.size() == 5);
    CHECK(a.obstacles.size() == 4);
    CHECK_NOTHROW(validate(a));
    o.seed = 10;
    CHECK(write_scenario(generate_scenario(o, p)) != write_scenario(a));
    o.obstacle_count = 500;
    CHECK_THROWS_AS(generate_scenario(o, p), SwarmError);
}
