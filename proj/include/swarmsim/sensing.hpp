#pragma once

#include <array>
#include <optional>
#include <vector>

#include "swarmsim/world.hpp"

namespace swarmsim {

struct Detection {
    int obstacle_id = 0;
    double distance = 0.0;  // to the closest boundary point
    double bearing = 0.0;   // signed, from the agent's heading
    Vec2 closest_point;
};

struct DetectionResult {
    bool obs_flag = false;
    std::vector<Detection> detections;  // ascending distance, ties by obstacle id
};

// A traversable opening between two detected obstacles.
struct GapInfo {
    double width = 0.0;        // minimum boundary-to-boundary distance
    Vec2 midpoint;             // midpoint of the realizing closest-point segment
    double bearing = 0.0;      // signed bearing from the detecting agent to midpoint
    std::array<int, 2> obstacle_ids{0, 0};
    Vec2 seg_a;                // realizing point on obstacle_ids[0]
    Vec2 seg_b;                // realizing point on obstacle_ids[1]
};

// Omnidirectional range query: obstacles whose closest boundary point lies
// within detection_range (inclusive).
DetectionResult detect_obstacles(const AgentState& agent, const WorldState& world,
                                 double detection_range);

// Among all detected pairs, the pair with the minimum inter-polygon clearance.
// none when fewer than two obstacles are detected.
std::optional<GapInfo> compute_gap(const AgentState& observer,
                                   const std::vector<Detection>& detections,
                                   const WorldState& world);

}  // namespace swarmsim
