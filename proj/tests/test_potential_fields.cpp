#include <doctest.h>

#include <cmath>
#include <random>

#include "swarm_apf/potential_fields.hpp"

using namespace swarm_apf;
using doctest::Approx;

namespace {

template <class Potential>
Vec2 negative_gradient(Potential&& u, Vec2 p, double h) {
    const double gx = (u(Vec2{p.x + h, p.y}) - u(Vec2{p.x - h, p.y})) / (2 * h);
    const double gy = (u(Vec2{p.x, p.y + h}) - u(Vec2{p.x, p.y - h})) / (2 * h);
    return {-gx, -gy};
}

double rel_err(Vec2 got, Vec2 want) { return norm(got - want) / std::max(norm(want), 1e-12); }

UavState uav(Vec2 pos, Vec2 start, Vec2 target) {
    UavState u;
    u.pos = pos;
    u.start = start;
    u.target = target;
    return u;
}

}  // namespace

TEST_CASE("attraction anchors") {
    SwarmParams p;
    CHECK(att_potential({1, 1}, {1, 1}, p) == 0.0);
    CHECK(att_potential({0, 0}, {2, 0}, p) == Approx(2.0));
    CHECK(att_force({1, 1}, {1, 1}, p) == Vec2{});
    const Vec2 f = att_force({0, 0}, {3, 0}, p);
    CHECK(f.x == Approx(3.0));
    CHECK(f.y == Approx(0.0));
    const Vec2 fd = negative_gradient([&](Vec2 q) { return att_potential(q, {3, 0}, p); }, {0, 0}, 1e-5);
    CHECK(rel_err(fd, f) < 1e-6);
}

TEST_CASE("repulsion anchors") {
    SwarmParams p;
    const Obstacle o{{0, 0}, 1.0, 4.0};
    CHECK(rep_force({5, 0}, o, p) == Vec2{});
    CHECK(norm(rep_force({4, 0}, o, p)) < 1e-12);
    const Vec2 f = rep_force({2, 0}, o, p);
    CHECK(f.x == Approx(31.25).epsilon(1e-12));
    CHECK(f.y == Approx(0.0));
    const Vec2 fd = negative_gradient([&](Vec2 q) { return rep_potential(q, o, p); }, {2, 0}, 1e-6);
    CHECK(rel_err(fd, f) < 1e-5);
    CHECK(norm(rep_force({4.0 - 1e-7, 0}, o, p)) < 1e-3);
}

TEST_CASE("forces are negative gradients at random points") {
    SwarmParams p;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    std::uniform_real_distribution<double> rr(1.2, 4.0);
    for (int i = 0; i < 200; ++i) {
        const Vec2 pt{c(rng), c(rng)};
        const Vec2 tgt{c(rng), c(rng)};
        const Vec2 fa = att_force(pt, tgt, p);
        const Vec2 ga = negative_gradient([&](Vec2 q) { return att_potential(q, tgt, p); }, pt, 1e-5);
        CHECK(rel_err(ga, fa) < 1e-6);

        const Obstacle o{{c(rng), c(rng)}, 0.5, rr(rng)};
        const double dist = distance(pt, o.center);
        if (dist < 0.6 || std::abs(dist - o.influence) < 1e-3) continue;
        const Vec2 fr = rep_force(pt, o, p);
        const Vec2 gr = negative_gradient([&](Vec2 q) { return rep_potential(q, o, p); }, pt, 1e-7);
        if (dist > o.influence) {
            CHECK(fr == Vec2{});
        } else {
            CHECK(rel_err(gr, fr) < 1e-5);
        }
    }
}

TEST_CASE("enhanced attraction") {
    SwarmParams p;
    const auto u = uav({0, 0}, {0, 0}, {10, 0});
    CHECK(enhancement_exponent(u, p) == Approx(std::pow(10.0, 1.2) / 15.0).epsilon(1e-12));
    const Vec2 f = enhanced_att_force(u, p);
    CHECK(f.x == Approx(std::exp(std::pow(10.0, 1.2) / 15.0)).epsilon(1e-12));
    CHECK(std::abs(f.x - 2.8766) < 1e-3);
    CHECK(enhanced_att_force(uav({9.8, 0}, {0, 0}, {10, 0}), p) == Vec2{});
    CHECK_THROWS_AS(enhancement_exponent(uav({0, 0}, {1, 1}, {1, 1}), p), DegenerateScenarioError);

    // Magnitude grows monotonically as the UAV approaches along the line.
    double last = 0.0;
    for (double x = 0.0; x < 9.4; x += 0.5) {
        const double m = norm(enhanced_att_force(uav({x, 0}, {0, 0}, {10, 0}), p));
        CHECK(m > last);
        last = m;
    }
}

TEST_CASE("sub-goal attraction") {
    SwarmParams p;
    const auto u = uav({0, 0}, {0, 0}, {50, 0});
    CHECK(norm(aux_att_force(u, {16, 0}, p)) == Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(norm(aux_att_force(u, {0, 32}, p)) == Approx(std::exp(0.25)).epsilon(1e-12));
    const Vec2 dir = unit(aux_att_force(u, {0, 32}, p), 1e-9);
    CHECK(dir.y == Approx(1.0));
    CHECK(norm(aux_att_force(u, {1e-6, 0}, p)) == Approx(p.f_cap));
    CHECK(norm(aux_att_force(u, {0.5, 0}, p)) == Approx(p.f_cap));
}

TEST_CASE("attract_dispatch routes by variant") {
    SwarmParams p;
    auto u = uav({0, 0}, {0, 0}, {10, 0});
    CHECK(attract_dispatch(u, Variant::TAPF, p) == att_force(u.pos, u.target, p));
    CHECK(attract_dispatch(u, Variant::IAPF, p) == att_force(u.pos, u.target, p));
    CHECK(attract_dispatch(u, Variant::OAPF, p) == enhanced_att_force(u, p));

    u.subgoal = SubGoal{{3, 4}, 0, 1};
    CHECK(attract_dispatch(u, Variant::TAPF, p) == att_force(u.pos, u.target, p));
    CHECK(attract_dispatch(u, Variant::IAPF, p) == att_force(u.pos, {3, 4}, p));
    CHECK(attract_dispatch(u, Variant::OAPF, p) == aux_att_force(u, {3, 4}, p));
}

TEST_CASE("combine sums the parts") {
    const auto b = combine({1, 2}, {3, 4}, {-1, 0.5});
    CHECK(b.resultant == Vec2{3, 6.5});
}
