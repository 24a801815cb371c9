#pragma once

#include <vector>

#include "swarmsim/world.hpp"

namespace swarmsim {

// V-shape layout: leader at the apex, even ids trailing back-left, odd ids
// back-right. spacing is the distance between consecutive slots on one leg,
// half_angle the leg's angle off the reversed heading axis.
struct FormationSpec {
    int n_agents = 1;
    double spacing = 10.0;
    double half_angle = 0.78539816339744831;  // pi/4

    void validate() const;
};

// Ordered point set, one point per agent; index k belongs to agent id k+1.
struct ShapePointSet {
    std::vector<Vec2> points;

    std::size_t size() const { return points.size(); }
    const Vec2& operator[](std::size_t i) const { return points[i]; }
    Vec2& operator[](std::size_t i) { return points[i]; }
};

// id 1 -> Leader, even -> Left, odd > 1 -> Right. Throws for id < 1.
Leg leg_of(int id);

// Slot k for agent id k+1, anchored at the leader pose. Even id 2k sits on
// the left leg at depth k, odd id 2k+1 mirrored on the right leg.
ShapePointSet slot_positions(const Pose& leader_pose, const FormationSpec& spec);

// Current agent positions indexed by id.
ShapePointSet current_shape(const WorldState& world);

// Formation-mode waypoint for a follower: its own id slot anchored at the
// swarm leader's pose. Throws if called on the leader.
Vec2 formation_waypoint(const AgentState& agent, const AgentState& swarm_leader,
                        const FormationSpec& spec);

}  // namespace swarmsim
