#include "apv/geometry.hpp"

#include <gtest/gtest.h>
#include <random>

using namespace apv;

namespace {

Polygon2 square(double x0, double y0, double side) {
    return {{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}};
}

Polygon2 random_convex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> c(0.0, 10.0);
    std::uniform_real_distribution<double> r(0.5, 4.0);
    const double cx = c(rng);
    const double cy = c(rng);
    const double a = r(rng);
    const double b = r(rng);
    const double phase = c(rng);
    Polygon2 p;
    for (int k = 0; k < 6; ++k) {
        const double t = phase + k * 2 * 3.14159265358979 / 6;
        p.push_back({cx + a * std::cos(t), cy + b * std::sin(t)});
    }
    return p;
}

bool inside_convex(const Polygon2& p, double x, double y) {
    int sign = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& a = p[i];
        const auto& b = p[(i + 1) % p.size()];
        const double cr = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
        const int s = cr > 0 ? 1 : (cr < 0 ? -1 : 0);
        if (s != 0) {
            if (sign != 0 && s != sign) {
                return false;
            }
            sign = s;
        }
    }
    return true;
}

}  // namespace

TEST(Geometry, PolygonAreaEitherWinding) {
    auto sq = square(1, 1, 2);
    EXPECT_DOUBLE_EQ(polygon_area(sq), 4.0);
    std::reverse(sq.begin(), sq.end());
    EXPECT_DOUBLE_EQ(polygon_area(sq), 4.0);
    EXPECT_EQ(polygon_area({}), 0.0);
}

TEST(Geometry, ClipBox) {
    EXPECT_DOUBLE_EQ(polygon_area(clip_box(square(-1, -1, 2), 0, 0, 5, 5)), 1.0);
    EXPECT_TRUE(clip_box(square(10, 10, 1), 0, 0, 5, 5).empty());
}

TEST(Geometry, ConvexSpan) {
    const auto s = convex_span_at(square(0, 0, 2), 1.0);
    ASSERT_TRUE(s);
    EXPECT_DOUBLE_EQ(s->first, 0.0);
    EXPECT_DOUBLE_EQ(s->second, 2.0);
    EXPECT_FALSE(convex_span_at(square(0, 0, 2), 3.0));
}

TEST(Geometry, UnionOfSquares) {
    const std::vector<Polygon2> polys{square(0, 0, 2), square(1, 1, 2), square(5, 5, 1)};
    EXPECT_NEAR(convex_union_area(polys), 4 + 4 - 1 + 1, 1e-12);
    const std::vector<Polygon2> same{square(0, 0, 2), square(0, 0, 2)};
    EXPECT_NEAR(convex_union_area(same), 4.0, 1e-12);
}

// Union area against a fine point-sampling estimate of random hexagons.
TEST(Geometry, UnionMatchesSampling) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polygon2> polys;
        for (int k = 0; k < 4; ++k) {
            polys.push_back(random_convex(rng));
        }
        const double step = 0.02;
        std::size_t hits = 0;
        for (double y = -5 + step / 2; y < 15; y += step) {
            for (double x = -5 + step / 2; x < 15; x += step) {
                for (const auto& p : polys) {
                    if (inside_convex(p, x, y)) {
                        ++hits;
                        break;
                    }
                }
            }
        }
        EXPECT_NEAR(convex_union_area(polys), hits * step * step, 0.05);
    }
}

TEST(Geometry, RayHitsRect) {
    const Rect3 r{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    EXPECT_TRUE(ray_hits_rect({0.5, 0.5, 0}, {0, 0, 1}, r));
    EXPECT_FALSE(ray_hits_rect({0.5, 0.5, 2}, {0, 0, 1}, r));
    EXPECT_FALSE(ray_hits_rect({1.5, 0.5, 0}, {0, 0, 1}, r));
    EXPECT_FALSE(ray_hits_rect({0.5, 0.5, 0}, {1, 0, 0}, r));
    EXPECT_DOUBLE_EQ(r.area(), 1.0);
}
