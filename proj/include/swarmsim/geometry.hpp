#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace swarmsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    // 90-degree counterclockwise rotation.
    constexpr Vec2 perp() const { return {-y, x}; }
    Vec2 normalized() const;
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Unit vector for a heading angle (0 = +x, pi/2 = +y).
inline Vec2 heading_dir(double heading) { return {std::cos(heading), std::sin(heading)}; }

// Normalize an angle into (-pi, pi]. Throws on non-finite input.
double wrap_angle(double theta);

struct Pose {
    Vec2 position;
    double heading = 0.0;  // radians in (-pi, pi]
};

// Signed angle from pose.heading to the ray toward target.
// Positive = target on the agent's left (counterclockwise), negative = right.
// Throws if target coincides with the pose position.
double bearing_from(const Pose& pose, const Vec2& target);

Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Convex polygon utilities. Vertices are counterclockwise; at least 3,
// strictly convex, no repeats.
bool is_strictly_convex_ccw(std::span<const Vec2> vertices);

// Closest point on the polygon boundary to p (p may be inside).
Vec2 closest_boundary_point(std::span<const Vec2> vertices, const Vec2& p);

// Strict interior test for a convex CCW polygon; boundary points count as inside.
bool convex_contains(std::span<const Vec2> vertices, const Vec2& p);

// Distance from p to the polygon: 0 if inside, else distance to boundary.
double distance_to_polygon(std::span<const Vec2> vertices, const Vec2& p);

struct ClosestPair {
    Vec2 on_a;
    Vec2 on_b;
    double dist = 0.0;
};

// Minimum distance between the boundaries of two disjoint convex polygons,
// with the realizing points. Scans vertex-vs-edge both ways, which is exact
// for non-intersecting convex shapes.
ClosestPair polygon_clearance(std::span<const Vec2> a, std::span<const Vec2> b);

}  // namespace swarmsim
