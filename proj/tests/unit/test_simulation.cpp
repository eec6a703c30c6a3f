#include "apv/errors.hpp"
#include "apv/simulation.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace apv;

namespace {

Layout field(MountKind kind, double s, double h, double size) {
    LayoutConfig c;
    c.kind = kind;
    c.spacing = s;
    c.height = h;
    c.field_width = size;
    c.field_length = size;
    return build_layout(c, 56.49);
}

SimulationOptions partial() {
    SimulationOptions o;
    o.require_full_year = false;
    return o;
}

}  // namespace

TEST(Simulation, SeriesChecks) {
    auto s = fixture::synthetic_days(2015, 7, 1, 1, fixture::foulum());
    EXPECT_NO_THROW(check_hourly_series(s, false));
    EXPECT_THROW(check_hourly_series(s, true), InputError);
    s.erase(s.begin() + 5);
    try {
        check_hourly_series(s, false);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("2015-07-01T05:00Z"), std::string::npos);
    }
    EXPECT_THROW(check_hourly_series({}, false), InputError);
}

TEST(Simulation, SingleRowHasNoShadowLoss) {
    const auto samples = fixture::synthetic_days(2015, 6, 1, 2, fixture::foulum());
    const auto l = field(MountKind::tilt, 12.0, 2.0, 10.0);
    ASSERT_EQ(l.row_count(), 1u);
    const auto sim = simulate_year(l, samples, fixture::foulum(), PanelModel{}, partial());
    EXPECT_GT(sim.energy_wh(), 0.0);
    EXPECT_DOUBLE_EQ(sim.energy_wh(), sim.energy_noshadow_wh());
}

TEST(Simulation, ShadedNeverExceedsUnshaded) {
    const auto samples = fixture::synthetic_days(2015, 12, 1, 3, fixture::foulum());
    for (auto kind : {MountKind::tilt, MountKind::vertical, MountKind::tracking}) {
        const auto sim = simulate_year(field(kind, 3.0, 2.0, 20.0), samples, fixture::foulum(), PanelModel{}, partial());
        for (const auto& h : sim.hours) {
            ASSERT_LE(h.power, h.power_noshadow + 1e-9);
            ASSERT_GE(h.power, 0.0);
            ASSERT_GE(h.front_effective_shading, 0.0);
            ASSERT_LE(h.front_effective_shading, 1.0);
        }
        EXPECT_LT(sim.energy_wh(), sim.energy_noshadow_wh());
    }
}

TEST(Simulation, NightIsZero) {
    const auto samples = fixture::synthetic_days(2015, 3, 1, 1, fixture::foulum());
    const auto sim = simulate_year(field(MountKind::vertical, 6, 2, 20), samples, fixture::foulum(), PanelModel{},
                                   partial());
    EXPECT_EQ(sim.hours[0].power, 0.0);
    EXPECT_EQ(sim.hours[23].power, 0.0);
}

// One unshaded row at solar noon, recomputed by hand from the horizontal
// weather without any library transposition or power call.
TEST(Simulation, HandComputedNoonHour) {
    const auto loc = fixture::foulum();
    const auto samples = fixture::synthetic_days(2015, 6, 21, 1, loc);
    const auto l = field(MountKind::tilt, 12.0, 2.0, 10.0);
    const auto sim = simulate_year(l, samples, loc, PanelModel{}, partial());
    const std::size_t h = 11;  // 11:00-12:00 UTC, sun near the meridian
    const auto& s = samples[h];
    const auto sun = solar_position(loc, s.time + std::chrono::minutes{30});

    const double beta = deg2rad(3.7 + 0.69 * 56.49);
    const Vec3 sv = sun_vector(sun);
    const Vec3 n{0.0, -std::sin(beta), std::cos(beta)};
    const double cos_t = dot(sv, n);
    const double sin_a = std::sin(sun.altitude);
    const double day = 172.0;
    const double g = 2 * kPi * (day - 1) / 365.0;
    const double ecc = 1.000110 + 0.034221 * std::cos(g) + 0.001280 * std::sin(g) + 0.000719 * std::cos(2 * g) +
                       0.000077 * std::sin(2 * g);
    const double k1 = s.direct_horizontal / (1361.0 * ecc * sin_a);
    const double f = s.diffuse_horizontal / s.global_horizontal;
    const double khori = 1 + std::sqrt(1 - f) * std::pow(std::sin(sun.altitude / 2), 3);
    const double b = s.direct_horizontal * cos_t / sin_a;
    const double dc = k1 * s.diffuse_horizontal * cos_t / sin_a;
    const double di = khori * (1 - k1) * s.diffuse_horizontal * (1 + std::cos(beta)) / 2;
    const double r = 0.2 * s.global_horizontal * (1 - std::cos(beta)) / 2;
    const double ar = 0.17;
    const double al = 1 - (1 - std::exp(-cos_t / ar)) / (1 - std::exp(-1 / ar));
    const double geff = (b + dc) * (1 - al) + di + r;
    const double zmid = 2.0 + 2.0 * std::sin(beta) / 2;
    const double wind = std::pow(zmid / 10.0, 2.0) * s.wind_speed_10m;
    const double tc = s.air_temperature + geff / (26.92 + 6.24 * wind);
    const double lg = std::log(geff / 1000.0);
    const double t = tc - 25.0;
    const double eta = 1 - 0.017237 * lg - 0.040465 * lg * lg - 0.004702 * t + 0.000149 * t * lg +
                       0.000170 * t * lg * lg + 0.000005 * t * t;
    const double pstc = 0.2 * 1000.0 * 2.0 * 10.0;
    const double expected = pstc * eta * 0.86 * geff / 1000.0;
    EXPECT_NEAR(sim.hours[h].power, expected, 1e-6 * expected);
    EXPECT_NEAR(sim.capacity_w, pstc, 1e-9);
}

TEST(Simulation, ThreadCountDoesNotChangeResult) {
    const auto samples = fixture::synthetic_days(2015, 9, 1, 4, fixture::foulum());
    const auto l = field(MountKind::vertical, 3.0, 2.0, 20.0);
    SimulationOptions many = partial();
    many.threads = 6;
    const auto a = simulate_year(l, samples, fixture::foulum(), PanelModel{}, partial());
    const auto b = simulate_year(l, samples, fixture::foulum(), PanelModel{}, many);
    ASSERT_EQ(a.hours.size(), b.hours.size());
    for (std::size_t i = 0; i < a.hours.size(); ++i) {
        EXPECT_EQ(a.hours[i].power, b.hours[i].power);
        EXPECT_EQ(a.hours[i].power_noshadow, b.hours[i].power_noshadow);
    }
}

TEST(Simulation, MonthlyDailySpecificYield) {
    AnnualSimulation sim;
    sim.capacity_w = 1000.0;
    HourlyOutput h;
    h.time = make_utc(2015, 2, 10, 12);
    h.power = 2800.0;
    sim.hours.push_back(h);
    const auto m = sim.monthly_daily_specific_yield();
    EXPECT_DOUBLE_EQ(m[1], 0.1);
    EXPECT_DOUBLE_EQ(m[0], 0.0);
}

TEST(Simulation, BifacialRearAddsEnergy) {
    const auto samples = fixture::synthetic_days(2015, 6, 1, 2, fixture::foulum());
    LayoutConfig c;
    c.kind = MountKind::vertical;
    c.spacing = 12.0;
    c.height = 2.0;
    c.field_width = 10.0;
    c.field_length = 10.0;
    const auto bi = simulate_year(build_layout(c, 56.49), samples, fixture::foulum(), PanelModel{}, partial());
    c.bifaciality = 0.0;
    const auto mono = simulate_year(build_layout(c, 56.49), samples, fixture::foulum(), PanelModel{}, partial());
    EXPECT_GT(bi.energy_wh(), 1.3 * mono.energy_wh());
}
