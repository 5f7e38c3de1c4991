#pragma once

#include <span>
#include <vector>

#include "swarm_apf/params.hpp"

namespace swarm_apf {

/// Two agents occupy (numerically) the same position.
class CoincidentPositionError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

struct Neighbor {
    int id = 0;
    double dist = 0.0;
    Vec2 dir;  ///< unit vector from the owner toward this neighbor
};

/// Agents strictly inside the communication radius of `owner`, nearest first.
struct NeighborSet {
    int owner = 0;
    std::vector<Neighbor> members;
};

/// Radius-r neighbor query, truncated to the k_max nearest when k_max > 0.
/// Entries of `others` sharing self's id are skipped, so a full swarm
/// snapshot may be passed directly.
NeighborSet neighbors(const UavState& self, std::span<const UavState> others, const SwarmParams& params);

/// Pairwise spacing force acting on the owner. Pushes away from the
/// neighbor below the ideal spacing d, pulls toward it above, and vanishes
/// at d. `dir` points from the owner to the neighbor.
Vec2 interaction_force(double dist, Vec2 dir, const SwarmParams& params);

/// Sum of interaction forces over a neighbor set.
Vec2 formation_force(const NeighborSet& nbrs, const SwarmParams& params);

}  // namespace swarm_apf
