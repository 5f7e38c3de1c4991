#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "swarm_apf/analytics.hpp"

using namespace swarm_apf;
using doctest::Approx;

namespace {

std::vector<Vec2> transform(const std::vector<Vec2>& pts, double angle, Vec2 shift) {
    std::vector<Vec2> out;
    for (const auto& p : pts) out.push_back(rotate(p, angle) + shift);
    return out;
}

std::vector<Vec2> random_walk(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> turn(-0.3, 0.3);
    std::vector<Vec2> pts{{0, 0}};
    double h = 0.0;
    for (int i = 0; i < n; ++i) {
        h += turn(rng);
        pts.push_back(pts.back() + 0.2 * from_bearing(h));
    }
    return pts;
}

TrajectoryLog log_of(const std::vector<std::vector<Vec2>>& paths) {
    TrajectoryLog log;
    for (std::size_t t = 0; t < paths[0].size(); ++t) {
        std::vector<UavRecord> row;
        for (const auto& p : paths) {
            UavRecord r;
            r.pos = p[t];
            row.push_back(r);
        }
        log.rows.push_back(row);
    }
    log.outcome = Outcome::Complete;
    return log;
}

RunMetrics fake(Variant v, double len, int changes) {
    RunMetrics m;
    m.variant = v;
    m.outcome = Outcome::Complete;
    m.geometry = "g";
    m.path_length = len;
    m.angle_change_count = changes;
    return m;
}

}  // namespace

TEST_CASE("path length anchors") {
    const std::vector<Vec2> still{{1, 1}, {1, 1}, {1, 1}};
    CHECK(path_length(still) == 0.0);
    std::vector<Vec2> line;
    for (int i = 0; i <= 50; ++i) line.push_back({0.2 * i, 0});
    CHECK(path_length(line) == Approx(10.0));
    const std::vector<Vec2> ell{{0, 0}, {3, 0}, {3, 4}};
    CHECK(path_length(ell) == Approx(7.0).epsilon(1e-12));
    const std::vector<Vec2> other{{0, 5}, {4, 5}, {4, 8}};
    CHECK(path_length(log_of({ell, other})) == Approx(14.0));
}

TEST_CASE("heading series") {
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {1, 1}, {1, 1}, {0, 0}};
    const auto h = heading_series(pts);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == Approx(0.0));
    CHECK(h[1] == Approx(90.0));
    CHECK(h[2] == Approx(-135.0));
    const std::vector<Vec2> back{{0, 0}, {-1, 0}};
    CHECK(heading_series(back)[0] == Approx(180.0));
    const std::vector<Vec2> q1{{0, 0}, {2, 1}};
    CHECK(heading_series(q1)[0] == Approx(rad_to_deg(std::atan(0.5))));
}

TEST_CASE("angle change counting") {
    const std::vector<Vec2> ell{{0, 0}, {3, 0}, {3, 4}};
    CHECK(angle_change_count(heading_series(ell)) == 1);
    const std::vector<Vec2> straight{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK(angle_change_count(heading_series(straight)) == 0);
    const std::vector<double> wrap{179.0, -179.0};
    CHECK(angle_change_count(wrap) == 0);
    const std::vector<double> edge{0.0, 5.0, 10.0, 15.5, 15.5, 20.0};
    CHECK(angle_change_count(edge) == 1);
    CHECK(max_abs_turn(wrap) == Approx(2.0));
    const std::vector<double> reverse{0.0, 180.0};
    CHECK(angle_change_count(reverse) == 1);
}

TEST_CASE("metrics are invariant under rigid motion") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ang(-kPi, kPi), off(-100.0, 100.0);
    for (int i = 0; i < 50; ++i) {
        const auto pts = random_walk(rng, 120);
        const auto moved = transform(pts, ang(rng), {off(rng), off(rng)});
        CHECK(path_length(moved) == Approx(path_length(pts)).epsilon(1e-9));
        const auto a = heading_series(pts), b = heading_series(moved);
        CHECK(angle_change_count(a) == angle_change_count(b));
        CHECK((angle_change_count(a) == 0) == (max_abs_turn(a) <= 5.0));
    }
}

TEST_CASE("compute_metrics on a synthetic log") {
    Scenario s;
    s.uavs = {{{0, 0}, {3, 4}}, {{0, 4}, {3, 8}}};
    s.obstacles = {{{10, 10}, 1, 2}};
    const std::vector<Vec2> a{{0, 0}, {3, 0}, {3, 4}};
    const std::vector<Vec2> b{{0, 4}, {3, 4}, {3, 8}};
    const auto m = compute_metrics(log_of({a, b}), s);
    CHECK(m.path_length == Approx(14.0));
    CHECK(m.angle_change_count == 2);
    CHECK(m.per_uav[0].straight_line == Approx(5.0));
    CHECK(m.min_inter_uav_dist == Approx(4.0));
    CHECK(m.per_uav[0].min_obstacle_clearance == Approx(distance({3, 4}, {10, 10}) - 1.0));
    CHECK(m.formation_rms_error == Approx(0.0));
    CHECK(m.per_uav[0].path_length >= distance(a.front(), a.back()));
}

TEST_CASE("compare rates") {
    const std::vector<RunMetrics> same{fake(Variant::TAPF, 100, 50), fake(Variant::OAPF, 100, 50)};
    const auto z = compare(same);
    CHECK(z.rows[1].path_reduction_pct == Approx(0.0));
    CHECK(z.rows[1].angle_ratio_pct == Approx(0.0));

    const std::vector<RunMetrics> runs{fake(Variant::TAPF, 100, 50), fake(Variant::IAPF, 97, 40),
                                       fake(Variant::OAPF, 94, 25)};
    const auto c = compare(runs);
    REQUIRE(c.rows.size() == 3);
    CHECK(c.rows[2].path_reduction_pct == Approx(6.0));
    CHECK(c.rows[2].angle_reduction_pct == Approx(50.0));
    CHECK(c.rows[2].angle_ratio_pct == Approx(100.0));
    CHECK(c.rows[2].path_ratio_pct == Approx((100.0 / 94.0 - 1) * 100));

    const std::vector<RunMetrics> five_uav{fake(Variant::TAPF, 805.56, 290), fake(Variant::OAPF, 774.53, 157)};
    const auto pc = compare(five_uav);
    CHECK(pc.rows[1].path_reduction_pct == Approx(3.852).epsilon(1e-3));
    CHECK(pc.rows[1].angle_reduction_pct == Approx(45.86).epsilon(1e-3));

    auto other = fake(Variant::OAPF, 1, 1);
    other.geometry = "h";
    const std::vector<RunMetrics> bad{fake(Variant::TAPF, 1, 1), other};
    CHECK_THROWS_AS(compare(bad), MismatchedScenarioError);
    const std::vector<RunMetrics> no_t{fake(Variant::OAPF, 1, 1)};
    CHECK_THROWS_AS(compare(no_t), SwarmError);
}

TEST_CASE("report formats") {
    const std::vector<RunMetrics> runs{fake(Variant::TAPF, 100, 50), fake(Variant::IAPF, 97, 40),
                                       fake(Variant::OAPF, 94, 25)};
    const auto c = compare(runs);
    const auto csv = render_csv(c);
    std::string header;
    for (auto col : comparison_columns()) header += (header.empty() ? "" : ",") + std::string(col);
    CHECK(csv.find(header) != std::string::npos);
    const auto text = render_text(c);
    for (auto label : {"T-APF", "I-APF", "O-APF", "(T - X) / T", "T / X - 1"}) CHECK(text.find(label) != std::string::npos);
}
