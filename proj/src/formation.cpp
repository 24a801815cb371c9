#include "swarmsim/formation.hpp"

#include <numbers>
#include <stdexcept>

namespace swarmsim {

void FormationSpec::validate() const {
    if (n_agents < 1) throw std::invalid_argument("formation: n_agents must be >= 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("formation: spacing must be positive");
    if (!(half_angle > 0.0 && half_angle < std::numbers::pi / 2.0))
        throw std::invalid_argument("formation: half_angle must lie in (0, pi/2)");
}

Leg leg_of(int id) {
    if (id < 1) throw std::invalid_argument("leg_of: id must be >= 1");
    if (id == 1) return Leg::Leader;
    return id % 2 == 0 ? Leg::Left : Leg::Right;
}

ShapePointSet slot_positions(const Pose& leader_pose, const FormationSpec& spec) {
    spec.validate();
    ShapePointSet shape;
    shape.points.reserve(static_cast<std::size_t>(spec.n_agents));
    shape.points.push_back(leader_pose.position);
    // Left leg points back-left at heading + (pi - half_angle), right leg mirrored.
    const double back_left = leader_pose.heading + std::numbers::pi - spec.half_angle;
    const double back_right = leader_pose.heading - std::numbers::pi + spec.half_angle;
    const Vec2 left_dir = heading_dir(back_left);
    const Vec2 right_dir = heading_dir(back_right);
    for (int id = 2; id <= spec.n_agents; ++id) {
        const int depth = id / 2;
        const Vec2 dir = id % 2 == 0 ? left_dir : right_dir;
        shape.points.push_back(leader_pose.position + dir * (spec.spacing * depth));
    }
    return shape;
}

ShapePointSet current_shape(const WorldState& world) {
    ShapePointSet shape;
    shape.points.reserve(world.agents.size());
    for (const AgentState& a : world.agents) shape.points.push_back(a.pose.position);
    return shape;
}

Vec2 formation_waypoint(const AgentState& agent, const AgentState& swarm_leader,
                        const FormationSpec& spec) {
    if (agent.id == 1) throw std::invalid_argument("formation_waypoint: leader has no slot target");
    const ShapePointSet slots = slot_positions(swarm_leader.pose, spec);
    return slots[static_cast<std::size_t>(agent.id - 1)];
}

}  // namespace swarmsim
