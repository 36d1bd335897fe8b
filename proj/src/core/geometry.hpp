#ifndef STEKLOV_GEOMETRY_HPP
#define STEKLOV_GEOMETRY_HPP

#include <span>
#include <vector>

namespace steklov {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double norm(Vec2 a);
double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);

// Closed polyline helpers; the closing edge back to points[0] is implicit.
double polyline_length(std::span<const Vec2> pts);
double polygon_area(std::span<const Vec2> pts);  // signed, CCW positive
Vec2 polygon_centroid(std::span<const Vec2> pts);
bool point_in_polygon(std::span<const Vec2> pts, Vec2 q);
double distance_to_polyline(std::span<const Vec2> pts, Vec2 q);

// Translation-minimized Hausdorff distance between the closed region bounded
// by the curve and a closed unit disk. The translation is found by downhill
// simplex from the curve centroid; distances are evaluated from the boundary
// samples of both sets plus containment probes. Throws invalid_input for
// degenerate (zero-area) curves.
double hausdorff_to_disk(std::span<const Vec2> curve);

} // namespace steklov

#endif
