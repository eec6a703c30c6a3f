#include "apv/errors.hpp"
#include "apv/layout.hpp"

#include <gtest/gtest.h>

using namespace apv;

namespace {

constexpr double kLat = 56.49;

Layout make(MountKind kind, double s, double h) {
    LayoutConfig c;
    c.kind = kind;
    c.spacing = s;
    c.height = h;
    return build_layout(c, kLat);
}

}  // namespace

TEST(Layout, RowCountAndDensity) {
    for (double s : {3.0, 4.5, 6.0, 7.5, 9.0, 12.0}) {
        for (double h : {1.0, 2.0, 3.0}) {
            for (auto kind : {MountKind::tilt, MountKind::vertical, MountKind::tracking}) {
                if (kind == MountKind::tracking && h > s) {
                    continue;
                }
                const auto l = make(kind, s, h);
                const auto rows = static_cast<std::size_t>(std::floor(100.0 / s + 1e-9)) + 1;
                EXPECT_EQ(l.row_count(), rows);
                const double density = 0.2 * 1000.0 * l.total_collector_area() / l.field_area();
                EXPECT_NEAR(density, 2.0 * static_cast<double>(rows) * h, 1e-9);
            }
        }
    }
}

TEST(Layout, Defaults) {
    const auto t = make(MountKind::tilt, 6, 2);
    EXPECT_DOUBLE_EQ(t.clearance(), 2.0);
    EXPECT_NEAR(rad2deg(t.tilt()), optimal_tilt_deg(kLat), 1e-12);
    EXPECT_FALSE(t.has_rear());
    const auto v = make(MountKind::vertical, 6, 2);
    EXPECT_DOUBLE_EQ(v.clearance(), 1.0);
    EXPECT_DOUBLE_EQ(v.bifaciality(), 0.8);
    const auto k = make(MountKind::tracking, 6, 2);
    EXPECT_DOUBLE_EQ(k.clearance(), 1.0);
    EXPECT_DOUBLE_EQ(k.bifaciality(), 0.0);
}

TEST(Layout, RejectsOverlapAndBadValues) {
    EXPECT_THROW(make(MountKind::tracking, 3, 3.5), std::invalid_argument);
    EXPECT_NO_THROW(make(MountKind::tracking, 3, 3));
    EXPECT_THROW(make(MountKind::tilt, 0, 2), std::invalid_argument);
    EXPECT_THROW(make(MountKind::tilt, 6, -1), std::invalid_argument);
    LayoutConfig c;
    c.tilt_deg = 95.0;
    EXPECT_THROW(build_layout(c, kLat), std::invalid_argument);
}

TEST(Layout, ParseMountKind) {
    EXPECT_EQ(parse_mount_kind("vertical"), MountKind::vertical);
    EXPECT_EQ(to_string(MountKind::tracking), "tracking");
    EXPECT_THROW(parse_mount_kind("carport"), InputError);
}

TEST(Layout, TiltCollectorGeometry) {
    const auto l = make(MountKind::tilt, 6, 2);
    const auto rects = l.collectors(l.front_orientation({}));
    ASSERT_EQ(rects.size(), 17u);
    EXPECT_DOUBLE_EQ(rects[3].origin.y, 18.0);
    EXPECT_DOUBLE_EQ(rects[3].origin.z, 2.0);
    EXPECT_NEAR(rects[0].corner(2).z, 2.0 + 2.0 * std::sin(l.tilt()), 1e-12);
    // Facing south: normal has negative y.
    EXPECT_LT(plane_normal(l.front_orientation({})).y, 0.0);
}

TEST(Layout, TrackerKeepsClearanceAtAnyRotation) {
    const auto l = make(MountKind::tracking, 6, 3);
    for (int d = -90; d <= 90; d += 5) {
        const auto front = rotation_to_orientation(deg2rad(d));
        for (const auto& r : l.collectors(front)) {
            for (int i = 0; i < 4; ++i) {
                EXPECT_GE(r.corner(i).z, 1.0 - 1e-9);
            }
            // Collector plane is perpendicular to the front normal.
            const Vec3 n = plane_normal(front);
            EXPECT_NEAR(dot(n, r.v), 0.0, 1e-9);
        }
    }
}

TEST(Layout, RearFaceOpposesFront) {
    const auto l = make(MountKind::vertical, 6, 2);
    const auto front = l.front_orientation({});
    const auto rear = l.rear_orientation(front);
    const Vec3 a = plane_normal(front);
    const Vec3 b = plane_normal(rear);
    EXPECT_NEAR(dot(a, b), -1.0, 1e-12);
}

TEST(Layout, EmptyLayoutHasNoRows) {
    const auto e = empty_layout(50, 50);
    EXPECT_EQ(e.row_count(), 0u);
    EXPECT_DOUBLE_EQ(e.field_area(), 2500.0);
}
