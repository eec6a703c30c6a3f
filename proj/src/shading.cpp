#include "apv/shading.hpp"

#include "apv/pv_electrical.hpp"

#include <algorithm>
#include <cmath>

namespace apv {

double CollectorShadow::shaded_area() const { return convex_union_area(polygons); }

double CollectorShadow::geometric_fraction() const {
    const double area = length * height;
    if (polygons.empty() || !(area > 0.0)) {
        return 0.0;
    }
    return std::clamp(shaded_area() / area, 0.0, 1.0);
}

CollectorShadow shadow_on_collector(std::span<const Rect3> collectors, std::size_t target, Vec3 face_normal,
                                    Vec3 sun_dir) {
    const Rect3& t = collectors[target];
    CollectorShadow out;
    out.length = norm(t.u);
    out.height = norm(t.v);
    const double ns = dot(face_normal, sun_dir);
    if (!(ns > 0.0) || !(out.length > 0.0) || !(out.height > 0.0)) {
        return out;
    }
    const Vec3 eu = (1.0 / out.length) * t.u;
    const Vec3 ev = (1.0 / out.height) * t.v;

    for (std::size_t j = 0; j < collectors.size(); ++j) {
        if (j == target) {
            continue;
        }
        const Rect3& src = collectors[j];
        // Signed distance of the source corners in front of the face.
        const double d0 = dot(face_normal, src.origin - t.origin);
        const double du = dot(face_normal, src.u);
        const double dv = dot(face_normal, src.v);
        if (d0 <= 0.0 && d0 + du <= 0.0 && d0 + dv <= 0.0 && d0 + du + dv <= 0.0) {
            continue;
        }
        // Keep the part of the source (in its own unit square) with d >= 0.
        Polygon2 unit{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
        Polygon2 front_part = clip_half_plane(unit, -du, -dv, d0);
        if (front_part.empty()) {
            continue;
        }
        Polygon2 projected;
        projected.reserve(front_part.size());
        for (const Point2& ab : front_part) {
            const Vec3 p = src.origin + ab.x * src.u + ab.y * src.v;
            const double d = d0 + ab.x * du + ab.y * dv;
            const Vec3 x = p - (d / ns) * sun_dir - t.origin;
            projected.push_back({dot(x, eu), dot(x, ev)});
        }
        Polygon2 clipped = clip_box(projected, 0.0, 0.0, out.length, out.height);
        if (polygon_area(clipped) > 0.0) {
            out.polygons.push_back(std::move(clipped));
        }
    }
    return out;
}

int shaded_blocks(const CollectorShadow& shadow, int total_blocks) {
    if (shadow.polygons.empty() || total_blocks <= 0) {
        return 0;
    }
    const double strip_h = shadow.height / total_blocks;
    const double strip_area = strip_h * shadow.length;
    int count = 0;
    std::vector<Polygon2> in_strip;
    for (int b = 0; b < total_blocks; ++b) {
        const double y0 = b * strip_h;
        const double y1 = (b + 1 == total_blocks) ? shadow.height : (b + 1) * strip_h;
        in_strip.clear();
        for (const auto& p : shadow.polygons) {
            Polygon2 c = clip_box(p, 0.0, y0, shadow.length, y1);
            if (!c.empty()) {
                in_strip.push_back(std::move(c));
            }
        }
        if (!in_strip.empty() && convex_union_area(in_strip) > kBlockShadedAreaFraction * strip_area) {
            ++count;
        }
    }
    return count;
}

std::vector<ShadingState> row_shading(const Layout& layout, const SolarPosition& sun, const PlaneOrientation& front,
                                      const PlaneOrientation& face, int total_blocks) {
    std::vector<ShadingState> states(layout.row_count());
    if (sun.altitude <= 0.0 || layout.row_count() < 2) {
        return states;
    }
    const Vec3 s = sun_vector(sun);
    const Vec3 n = plane_normal(face);
    if (dot(s, n) <= 0.0) {
        return states;
    }
    const auto rects = layout.collectors(front);
    for (std::size_t r = 0; r < rects.size(); ++r) {
        const CollectorShadow shadow = shadow_on_collector(rects, r, n, s);
        ShadingState& st = states[r];
        st.geometric = shadow.geometric_fraction();
        st.shaded_blocks = st.geometric > 0.0 ? shaded_blocks(shadow, total_blocks) : 0;
        st.effective = effective_shading_factor(st.geometric, st.shaded_blocks, total_blocks);
    }
    return states;
}

std::vector<Polygon2> ground_shadows(std::span<const Rect3> collectors, Vec3 sun_dir) {
    std::vector<Polygon2> out;
    if (!(sun_dir.z > 0.0)) {
        return out;
    }
    out.reserve(collectors.size());
    for (const Rect3& r : collectors) {
        Polygon2 poly;
        poly.reserve(4);
        for (int i = 0; i < 4; ++i) {
            const Vec3 p = r.corner(i);
            const double t = p.z / sun_dir.z;
            poly.push_back({p.x - t * sun_dir.x, p.y - t * sun_dir.y});
        }
        if (polygon_area(poly) > 0.0) {
            out.push_back(std::move(poly));
        }
    }
    return out;
}

double ground_shadow_area(const Layout& layout, const SolarPosition& sun, double width, double length) {
    if (sun.altitude <= 0.0) {
        return 0.0;
    }
    const auto rects = layout.collectors(layout.front_orientation(sun));
    auto shadows = ground_shadows(rects, sun_vector(sun));
    std::vector<Polygon2> clipped;
    clipped.reserve(shadows.size());
    for (const auto& p : shadows) {
        Polygon2 c = clip_box(p, 0.0, 0.0, width, length);
        if (!c.empty()) {
            clipped.push_back(std::move(c));
        }
    }
    return convex_union_area(clipped);
}

}  // namespace apv
