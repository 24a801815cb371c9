#pragma once

#include <optional>

#include "swarmsim/sensing.hpp"
#include "swarmsim/world.hpp"

namespace swarmsim {

enum class AvoidanceCase { SingleObstacle, TreatAsSingle, PassThrough };

// Which leg folds into the other when the swarm collapses to a queue.
enum class MergeDirection { LeftIntoRight, RightIntoLeft };

const char* to_string(AvoidanceCase c);
const char* to_string(MergeDirection d);

// Case split on obstacle count and gap width. The gap boundary is inclusive:
// width == safe_dist already allows passage.
AvoidanceCase classify(int obs_num, const std::optional<GapInfo>& gap, double safe_dist);

// Negative gap bearing (gap on the leader's right) folds the left leg into
// the right; positive folds right into left; zero is hard-wired LeftIntoRight.
MergeDirection merge_direction(double obs_ang);

// Temporary leader for a follower when the swarm collapses to a queue.
// LeftIntoRight: id-1 for everyone (queue 1,2,3,...).
// RightIntoLeft: even -> id+1, odd -> id-3 (queue 1,3,2,5,4,...), with two
// boundary clamps that keep the chain a single path rooted at the leader:
// an odd id whose id-3 would be below 1 follows the leader, and the deepest
// even id whose id+1 does not exist follows id-2 (the next queue neighbor
// once the missing odd is skipped). Throws for the leader itself.
int temp_leader_for(int id, MergeDirection dir, int n_agents);

// Directly-behind slot: queue_gap behind the temporary leader along its heading.
Vec2 queue_waypoint(const AgentState& agent, const AgentState& temp_leader, double queue_gap);

// True once p is on the far side of the gap segment's line (on the line
// counts as passed). ahead_reference fixes which side is "far" — any point
// known to lie beyond the gap, normally the destination.
bool gap_passed(const GapInfo& gap, const Vec2& ahead_reference, const Vec2& p);

// Leader guidance through a traversable gap: aim at the midpoint until the
// gap line is crossed, then at the destination.
Vec2 leader_passage_waypoint(const AgentState& leader, const GapInfo& gap,
                             const Vec2& destination);

// Minimal lateral-offset avoidance: offset the obstacle's closest point by
// clearance, perpendicular to the agent's heading, on the side of smaller
// heading deviation. Dead-ahead ties break to the right.
Vec2 avoid_single(const AgentState& agent, const Detection& nearest, double clearance);

// A queue member has finished the passage: past the gap line and more than
// clearance away from both gap obstacles.
bool passage_complete(const AgentState& agent, const GapInfo& gap, const WorldState& world,
                      const Vec2& destination, double clearance);

}  // namespace swarmsim
