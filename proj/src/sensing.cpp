#include "swarmsim/sensing.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmsim {

DetectionResult detect_obstacles(const AgentState& agent, const WorldState& world,
                                 double detection_range) {
    if (!(detection_range > 0.0))
        throw std::invalid_argument("detect_obstacles: detection_range must be positive");
    DetectionResult result;
    for (const Obstacle& o : world.obstacles) {
        const Vec2 cp = closest_boundary_point(o.vertices, agent.pose.position);
        const double d = (cp - agent.pose.position).norm();
        if (d > detection_range) continue;
        Detection det;
        det.obstacle_id = o.id;
        det.distance = d;
        det.closest_point = cp;
        det.bearing = d == 0.0 ? 0.0 : bearing_from(agent.pose, cp);
        result.detections.push_back(det);
    }
    std::sort(result.detections.begin(), result.detections.end(),
              [](const Detection& a, const Detection& b) {
                  if (a.distance != b.distance) return a.distance < b.distance;
                  return a.obstacle_id < b.obstacle_id;
              });
    result.obs_flag = !result.detections.empty();
    return result;
}

std::optional<GapInfo> compute_gap(const AgentState& observer,
                                   const std::vector<Detection>& detections,
                                   const WorldState& world) {
    if (detections.size() < 2) return std::nullopt;
    std::optional<GapInfo> best;
    for (std::size_t i = 0; i < detections.size(); ++i) {
        for (std::size_t j = i + 1; j < detections.size(); ++j) {
            const Obstacle* a = world.obstacle_by_id(detections[i].obstacle_id);
            const Obstacle* b = world.obstacle_by_id(detections[j].obstacle_id);
            if (!a || !b) throw std::invalid_argument("compute_gap: detection references unknown obstacle");
            const ClosestPair pair = polygon_clearance(a->vertices, b->vertices);
            if (!best || pair.dist < best->width) {
                GapInfo gap;
                gap.width = pair.dist;
                gap.seg_a = pair.on_a;
                gap.seg_b = pair.on_b;
                gap.midpoint = (pair.on_a + pair.on_b) * 0.5;
                gap.obstacle_ids = {a->id, b->id};
                gap.bearing = bearing_from(observer.pose, gap.midpoint);
                best = gap;
            }
        }
    }
    return best;
}

}  // namespace swarmsim
