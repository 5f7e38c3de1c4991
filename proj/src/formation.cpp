#include "swarm_apf/formation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace swarm_apf {

NeighborSet neighbors(const UavState& self, std::span<const UavState> others, const SwarmParams& params) {
    NeighborSet out{self.id, {}};
    // Positions of the members, used only to break exact distance ties
    // independently of id numbering.
    std::vector<std::pair<Neighbor, Vec2>> found;
    for (const auto& other : others) {
        if (other.id == self.id) continue;
        const Vec2 delta = other.pos - self.pos;
        const double dist = norm(delta);
        if (!(dist > params.eps_len)) {
            throw CoincidentPositionError(
                fmt::format("UAV {} and UAV {} are coincident (distance {})", self.id, other.id, dist));
        }
        if (dist < params.r) found.push_back({Neighbor{other.id, dist, delta / dist}, other.pos});
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.dist != b.first.dist) return a.first.dist < b.first.dist;
        if (a.second.x != b.second.x) return a.second.x < b.second.x;
        return a.second.y < b.second.y;
    });
    if (params.k_max > 0 && found.size() > static_cast<std::size_t>(params.k_max)) {
        found.resize(static_cast<std::size_t>(params.k_max));
    }
    out.members.reserve(found.size());
    for (const auto& f : found) out.members.push_back(f.first);
    return out;
}

Vec2 interaction_force(double dist, Vec2 dir, const SwarmParams& params) {
    dist = std::max(dist, params.eps_len);
    if (std::abs(dist - params.d) <= kTieEps) return {};
    if (dist < params.d) {
        const double inv = 1.0 / dist;
        const double m = params.beta * (inv - 1.0 / params.d) * inv * inv;
        return cap_magnitude(-m * dir, params.f_cap);
    }
    const double sigmoid = 2.0 / (1.0 + std::exp(-dist)) - 1.0;
    const double m = params.alpha * sigmoid * (dist - params.d);
    return cap_magnitude(m * dir, params.f_cap);
}

Vec2 formation_force(const NeighborSet& nbrs, const SwarmParams& params) {
    Vec2 total;
    for (const auto& n : nbrs.members) total += interaction_force(n.dist, n.dir, params);
    return total;
}

}  // namespace swarm_apf
