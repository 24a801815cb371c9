#pragma once

#include <string>
#include <vector>

#include "swarmsim/formation.hpp"
#include "swarmsim/registration.hpp"

namespace swarmsim {

enum class SimMode { Dfrpsr, Baseline };

const char* to_string(SimMode mode);
SimMode sim_mode_from_string(const std::string& s);

// Full description of one run. Every field has a documented default so a
// minimal file (or an empty one) loads into a valid configuration.
struct ScenarioConfig {
    int n_agents = 7;
    FormationSpec formation{7, 10.0, 0.78539816339744831};
    double agent_speed = 2.0;       // m/s, constant for every agent
    double dt = 0.1;                // s
    double detection_range = 30.0;  // m
    double safe_dist = 7.0;         // minimum traversable gap width
    double queue_gap = 5.0;         // inter-agent distance in the queue
    double clearance = 3.0;         // lateral avoidance offset / exit margin
    double arrival_radius = 2.0;    // m
    double turnback_tol = 0.5;      // per-agent reformation tolerance
    double avoid_react_distance = 15.0;  // engage single-obstacle avoidance below this range
    double weave_angle = 1.0;       // leader catch-up serpentine half-angle, rad
    double weave_period = 4.0;      // full serpentine period, s
    AnnealSchedule anneal;
    std::vector<std::vector<Vec2>> obstacles;  // convex CCW vertex lists
    Pose start_leader_pose{{0.0, 0.0}, 0.0};
    Vec2 destination{250.0, 0.0};
    SimMode mode = SimMode::Dfrpsr;
    double max_time = 600.0;  // s
    long seed = 1;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Parse, default, and validate a scenario file (sectioned key = value text).
ScenarioConfig load_scenario(const std::string& path);

// Parse from in-memory text; used by load_scenario and tests.
ScenarioConfig parse_scenario(const std::string& text);

// Canonical serialization; load_scenario(save) round-trips exactly.
std::string serialize_scenario(const ScenarioConfig& config);
void save_scenario(const ScenarioConfig& config, const std::string& path);

}  // namespace swarmsim
