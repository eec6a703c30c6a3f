#pragma once

#include "apv/geometry.hpp"
#include "apv/layout.hpp"
#include "apv/solar_geometry.hpp"

#include <span>
#include <vector>

namespace apv {

struct ShadingState {
    double geometric = 0.0;  // F_GS
    int shaded_blocks = 0;   // N_SB
    double effective = 0.0;  // F_ES
};

// Shadow cast on one collector, in its own metric frame:
// x along the row (0..length), y up the collector (0..height).
struct CollectorShadow {
    double length = 0.0;
    double height = 0.0;
    std::vector<Polygon2> polygons;  // convex, clipped to the collector

    double shaded_area() const;
    double geometric_fraction() const;
};

// Projects every other collector along the sun direction onto `target` as
// seen from the face with unit normal `face_normal`. Only geometry between
// the face and the sun casts shadow. Empty when the sun is behind the face.
CollectorShadow shadow_on_collector(std::span<const Rect3> collectors, std::size_t target, Vec3 face_normal,
                                    Vec3 sun_dir);

// The collector is split into `total_blocks` equal strips stacked along its
// short (y) axis; a strip counts as shaded when the shadow covers more than
// 0.1 % of it.
int shaded_blocks(const CollectorShadow& shadow, int total_blocks);

inline constexpr double kBlockShadedAreaFraction = 1e-3;

// Shading state for every row for one face of the collectors.
std::vector<ShadingState> row_shading(const Layout& layout, const SolarPosition& sun, const PlaneOrientation& front,
                                      const PlaneOrientation& face, int total_blocks);

// Ground-plane (z = 0) shadows of all collectors, one parallelogram each.
// Requires the sun above the horizon; returns nothing otherwise.
std::vector<Polygon2> ground_shadows(std::span<const Rect3> collectors, Vec3 sun_dir);

// Exact shaded ground area inside [0, w] x [0, l].
double ground_shadow_area(const Layout& layout, const SolarPosition& sun, double width, double length);

}  // namespace apv
