#include "swarmsim/world.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

const char* to_string(Leg leg) {
    switch (leg) {
        case Leg::Leader: return "leader";
        case Leg::Left: return "left";
        case Leg::Right: return "right";
    }
    return "?";
}

const char* to_string(AgentMode mode) {
    switch (mode) {
        case AgentMode::Formation: return "formation";
        case AgentMode::QueueTransition: return "queue_transition";
        case AgentMode::Queue: return "queue";
        case AgentMode::TurnBack: return "turn_back";
    }
    return "?";
}

const Obstacle* WorldState::obstacle_by_id(int id) const {
    for (const Obstacle& o : obstacles)
        if (o.id == id) return &o;
    return nullptr;
}

void validate_agent(const AgentState& a, int n_agents) {
    if (a.id < 1 || a.id > n_agents)
        throw std::invalid_argument("agent id out of range: " + std::to_string(a.id));
    if (!a.pose.position.finite() || !std::isfinite(a.pose.heading))
        throw std::invalid_argument("agent " + std::to_string(a.id) + ": non-finite pose");
    if (!(a.speed > 0.0))
        throw std::invalid_argument("agent " + std::to_string(a.id) + ": speed must be positive");
    const Leg expected = a.id == 1 ? Leg::Leader : (a.id % 2 == 0 ? Leg::Left : Leg::Right);
    if (a.leg != expected)
        throw std::invalid_argument("agent " + std::to_string(a.id) + ": leg inconsistent with id");
    if (a.id == 1) {
        if (a.permanent_leader_id)
            throw std::invalid_argument("leader must have no permanent leader");
    } else if (!a.permanent_leader_id) {
        throw std::invalid_argument("agent " + std::to_string(a.id) + ": missing permanent leader");
    }
    if (a.temp_leader_id) {
        if (*a.temp_leader_id == a.id)
            throw std::invalid_argument("agent " + std::to_string(a.id) + ": temp leader is itself");
        if (a.mode == AgentMode::Formation)
            throw std::invalid_argument("agent " + std::to_string(a.id) +
                                        ": temp leader set in formation mode");
    }
}

void validate_obstacle(const Obstacle& o) {
    if (o.vertices.size() < 3)
        throw std::invalid_argument("obstacle " + std::to_string(o.id) + ": needs >= 3 vertices");
    for (const Vec2& v : o.vertices)
        if (!v.finite())
            throw std::invalid_argument("obstacle " + std::to_string(o.id) + ": non-finite vertex");
    if (!is_strictly_convex_ccw(o.vertices))
        throw std::invalid_argument("obstacle " + std::to_string(o.id) +
                                    ": vertices must form a strictly convex CCW polygon");
}

void validate_world(const WorldState& w, double dt) {
    const int n = w.n_agents();
    if (n < 1) throw std::invalid_argument("world: no agents");
    for (int i = 0; i < n; ++i) {
        if (w.agents[static_cast<std::size_t>(i)].id != i + 1)
            throw std::invalid_argument("world: agent ids must be consecutive 1..n");
        validate_agent(w.agents[static_cast<std::size_t>(i)], n);
    }
    for (const Obstacle& o : w.obstacles) validate_obstacle(o);
    if (w.tick < 0) throw std::invalid_argument("world: negative tick");
    if (w.time != static_cast<double>(w.tick) * dt)
        throw std::invalid_argument("world: time must equal tick * dt");
}

AgentState step_toward(const AgentState& agent, const Vec2& waypoint, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_toward: dt must be positive");
    AgentState next = agent;
    const Vec2 d = waypoint - agent.pose.position;
    double heading = agent.pose.heading;
    if (d.x != 0.0 || d.y != 0.0) heading = std::atan2(d.y, d.x);
    next.pose.heading = wrap_angle(heading);
    next.pose.position = agent.pose.position + heading_dir(next.pose.heading) * (agent.speed * dt);
    return next;
}

}  // namespace swarmsim
