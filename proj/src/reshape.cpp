#include "swarmsim/reshape.hpp"

#include <stdexcept>

namespace swarmsim {

const char* to_string(AvoidanceCase c) {
    switch (c) {
        case AvoidanceCase::SingleObstacle: return "single_obstacle";
        case AvoidanceCase::TreatAsSingle: return "treat_as_single";
        case AvoidanceCase::PassThrough: return "pass_through";
    }
    return "?";
}

const char* to_string(MergeDirection d) {
    return d == MergeDirection::LeftIntoRight ? "left_into_right" : "right_into_left";
}

AvoidanceCase classify(int obs_num, const std::optional<GapInfo>& gap, double safe_dist) {
    if (obs_num < 1) throw std::invalid_argument("classify: obs_num must be >= 1");
    if (obs_num == 1) return AvoidanceCase::SingleObstacle;
    if (!gap) throw std::invalid_argument("classify: gap required when obs_num > 1");
    return gap->width >= safe_dist ? AvoidanceCase::PassThrough : AvoidanceCase::TreatAsSingle;
}

MergeDirection merge_direction(double obs_ang) {
    if (!std::isfinite(obs_ang)) throw std::invalid_argument("merge_direction: non-finite angle");
    return obs_ang > 0.0 ? MergeDirection::RightIntoLeft : MergeDirection::LeftIntoRight;
}

int temp_leader_for(int id, MergeDirection dir, int n_agents) {
    if (id < 2) throw std::invalid_argument("temp_leader_for: the leader is never reassigned");
    if (id > n_agents) throw std::invalid_argument("temp_leader_for: id exceeds swarm size");
    if (dir == MergeDirection::LeftIntoRight) return id - 1;
    if (id % 2 == 0) {
        if (id + 1 <= n_agents) return id + 1;
        return std::max(id - 2, 1);  // deepest even id: its odd successor does not exist
    }
    return std::max(id - 3, 1);
}

Vec2 queue_waypoint(const AgentState& agent, const AgentState& temp_leader, double queue_gap) {
    if (!(queue_gap > 0.0)) throw std::invalid_argument("queue_waypoint: queue_gap must be positive");
    if (agent.id == temp_leader.id)
        throw std::invalid_argument("queue_waypoint: agent cannot follow itself");
    return temp_leader.pose.position - heading_dir(temp_leader.pose.heading) * queue_gap;
}

bool gap_passed(const GapInfo& gap, const Vec2& ahead_reference, const Vec2& p) {
    Vec2 normal = (gap.seg_b - gap.seg_a).perp();
    if (normal.norm2() == 0.0) normal = ahead_reference - gap.midpoint;
    if (normal.norm2() == 0.0) throw std::invalid_argument("gap_passed: degenerate gap geometry");
    if ((ahead_reference - gap.midpoint).dot(normal) < 0.0) normal = -normal;
    return (p - gap.midpoint).dot(normal) >= 0.0;
}

Vec2 leader_passage_waypoint(const AgentState& leader, const GapInfo& gap,
                             const Vec2& destination) {
    if (gap_passed(gap, destination, leader.pose.position)) return destination;
    return gap.midpoint;
}

Vec2 avoid_single(const AgentState& agent, const Detection& nearest, double clearance) {
    if (!(clearance > 0.0)) throw std::invalid_argument("avoid_single: clearance must be positive");
    const Vec2 left = heading_dir(agent.pose.heading).perp();
    // Obstacle on the left (bearing >= 0, ties included): pass on its right.
    const Vec2 side = nearest.bearing >= 0.0 ? -left : left;
    return nearest.closest_point + side * clearance;
}

bool passage_complete(const AgentState& agent, const GapInfo& gap, const WorldState& world,
                      const Vec2& destination, double clearance) {
    if (!gap_passed(gap, destination, agent.pose.position)) return false;
    for (int oid : gap.obstacle_ids) {
        const Obstacle* o = world.obstacle_by_id(oid);
        if (!o) throw std::invalid_argument("passage_complete: gap references unknown obstacle");
        if (distance_to_polygon(o->vertices, agent.pose.position) <= clearance) return false;
    }
    return true;
}

}  // namespace swarmsim
