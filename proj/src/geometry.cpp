#include "swarmsim/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace swarmsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

Vec2 Vec2::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
    return {x / n, y / n};
}

double wrap_angle(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("wrap_angle: non-finite angle");
    double r = std::remainder(theta, 2.0 * kPi);  // lands in [-pi, pi]
    if (r <= -kPi) r = kPi;                       // map -pi to +pi
    return r;
}

double bearing_from(const Pose& pose, const Vec2& target) {
    const Vec2 d = target - pose.position;
    if (d.x == 0.0 && d.y == 0.0)
        throw std::invalid_argument("bearing_from: target coincides with position");
    return wrap_angle(std::atan2(d.y, d.x) - pose.heading);
}

Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return a;
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return a + ab * t;
}

bool is_strictly_convex_ccw(std::span<const Vec2> v) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        const Vec2& c = v[(i + 2) % n];
        if ((b - a).cross(c - b) <= 0.0) return false;  // collinear or clockwise turn
        if (a == b) return false;
    }
    return true;
}

Vec2 closest_boundary_point(std::span<const Vec2> v, const Vec2& p) {
    if (v.size() < 2) throw std::invalid_argument("closest_boundary_point: degenerate polygon");
    Vec2 best = v[0];
    double best_d2 = (p - best).norm2();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 q = closest_point_on_segment(p, v[i], v[(i + 1) % n]);
        const double d2 = (p - q).norm2();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = q;
        }
    }
    return best;
}

bool convex_contains(std::span<const Vec2> v, const Vec2& p) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        if ((b - a).cross(p - a) < 0.0) return false;  // right of a CCW edge
    }
    return true;
}

double distance_to_polygon(std::span<const Vec2> v, const Vec2& p) {
    if (convex_contains(v, p)) return 0.0;
    return (p - closest_boundary_point(v, p)).norm();
}

ClosestPair polygon_clearance(std::span<const Vec2> a, std::span<const Vec2> b) {
    ClosestPair best;
    best.dist = std::numeric_limits<double>::infinity();
    auto scan = [&best](std::span<const Vec2> pts, std::span<const Vec2> poly, bool pts_are_a) {
        const std::size_t n = poly.size();
        for (const Vec2& p : pts) {
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2 q = closest_point_on_segment(p, poly[i], poly[(i + 1) % n]);
                const double d = (p - q).norm();
                if (d < best.dist) {
                    best.dist = d;
                    best.on_a = pts_are_a ? p : q;
                    best.on_b = pts_are_a ? q : p;
                }
            }
        }
    };
    scan(a, b, true);
    scan(b, a, false);
    return best;
}

}  // namespace swarmsim
