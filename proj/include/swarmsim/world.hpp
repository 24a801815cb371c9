#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swarmsim/geometry.hpp"

namespace swarmsim {

enum class Leg { Leader, Left, Right };

enum class AgentMode { Formation, QueueTransition, Queue, TurnBack };

const char* to_string(Leg leg);
const char* to_string(AgentMode mode);

struct AgentState {
    int id = 1;  // leader is 1; even ids form the left leg, odd ids > 1 the right leg
    Pose pose;
    double speed = 1.0;  // constant for the whole run
    std::optional<int> permanent_leader_id;  // none only for the swarm leader
    std::optional<int> temp_leader_id;       // set only while merged into a queue
    AgentMode mode = AgentMode::Formation;
    Leg leg = Leg::Leader;

    // The leader an agent currently keeps distance to: temporary if set,
    // otherwise permanent. none for the swarm leader outside an episode.
    std::optional<int> effective_leader_id() const {
        return temp_leader_id ? temp_leader_id : permanent_leader_id;
    }
};

struct Obstacle {
    int id = 0;
    std::vector<Vec2> vertices;  // counterclockwise, strictly convex
};

struct WorldState {
    long long tick = 0;
    double time = 0.0;  // always tick * dt
    std::vector<AgentState> agents;  // ordered by id, ids 1..n consecutive
    std::vector<Obstacle> obstacles;
    Vec2 destination;

    const AgentState& agent(int id) const { return agents.at(static_cast<std::size_t>(id - 1)); }
    AgentState& agent(int id) { return agents.at(static_cast<std::size_t>(id - 1)); }
    const AgentState& leader() const { return agents.front(); }
    int n_agents() const { return static_cast<int>(agents.size()); }
    const Obstacle* obstacle_by_id(int id) const;
};

// Throws std::invalid_argument naming the violated constraint.
void validate_agent(const AgentState& a, int n_agents);
void validate_obstacle(const Obstacle& o);
void validate_world(const WorldState& w, double dt);

// Advance one kinematic step: full speed*dt along the direction to waypoint,
// heading snapped to that direction. Overshoot is allowed; the step length
// never shrinks. A waypoint equal to the current position keeps the previous
// heading.
AgentState step_toward(const AgentState& agent, const Vec2& waypoint, double dt);

}  // namespace swarmsim
