#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace apv {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
    friend Vec3 operator*(Vec3 a, double k) { return k * a; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Vertices in order (either winding). Empty means no area.
using Polygon2 = std::vector<Point2>;

// A planar rectangle: origin + a*u + b*v for a, b in [0, 1], with u ⟂ v.
struct Rect3 {
    Vec3 origin;
    Vec3 u;
    Vec3 v;

    Vec3 corner(int i) const;
    double area() const { return norm(u) * norm(v); }
};

double polygon_area(const Polygon2& poly);

// Sutherland-Hodgman clip of `subject` to the half-plane a*x + b*y <= c.
Polygon2 clip_half_plane(const Polygon2& subject, double a, double b, double c);

// Clip against an axis-aligned box [x0, x1] x [y0, y1].
Polygon2 clip_box(const Polygon2& subject, double x0, double y0, double x1, double y1);

// Horizontal extent of a convex polygon at height y, if the line crosses it.
std::optional<std::pair<double, double>> convex_span_at(const Polygon2& poly, double y);

// Exact area of the union of convex polygons (slab decomposition: between
// consecutive vertex / edge-crossing ordinates the union width is linear).
double convex_union_area(std::span<const Polygon2> polys);

// Ray-rectangle hit test used by brute-force oracles and the CLI validator.
bool ray_hits_rect(Vec3 origin, Vec3 direction, const Rect3& rect);

}  // namespace apv
