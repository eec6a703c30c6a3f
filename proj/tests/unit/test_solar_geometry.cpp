#include "apv/solar_geometry.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>
#include <random>

using namespace apv;

namespace {

double angle_diff(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

}  // namespace

TEST(SolarGeometry, AgreesWithAlmanacAlgorithm) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lat(-66.0, 66.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    std::uniform_int_distribution<int> year(1960, 2090);
    std::uniform_int_distribution<int> doy(0, 364);
    std::uniform_int_distribution<int> minute(0, 24 * 60 - 1);
    double worst_alt = 0.0;
    double worst_az = 0.0;
    for (int i = 0; i < 5000; ++i) {
        const GeoLocation loc{lat(rng), lon(rng)};
        const auto t = make_utc(year(rng), 1, 1) + std::chrono::days{doy(rng)} + std::chrono::minutes{minute(rng)};
        const auto ours = solar_position(loc, t);
        const auto ref = oracle::michalsky(loc.latitude_deg, loc.longitude_deg, t);
        worst_alt = std::max(worst_alt, rad2deg(std::abs(ours.altitude - ref.altitude)));
        // Azimuth is ill-conditioned near the zenith; compare where it is defined.
        if (ref.altitude < deg2rad(85.0)) {
            worst_az = std::max(worst_az, rad2deg(angle_diff(ours.azimuth, ref.azimuth)) * std::cos(ref.altitude));
        }
    }
    EXPECT_LT(worst_alt, 0.05);
    EXPECT_LT(worst_az, 0.05);
}

TEST(SolarGeometry, NoonSunIsSouthInNorthernMidLatitudes) {
    const GeoLocation foulum{56.49, 9.57};
    // Solar noon near 11:20 UTC on the June solstice.
    double best_alt = -1.0;
    double az_at_best = 0.0;
    for (int m = 10 * 60; m < 13 * 60; ++m) {
        const auto s = solar_position(foulum, make_utc(2015, 6, 21) + std::chrono::minutes{m});
        if (s.altitude > best_alt) {
            best_alt = s.altitude;
            az_at_best = s.azimuth;
        }
    }
    EXPECT_NEAR(rad2deg(best_alt), 90.0 - 56.49 + 23.44, 0.05);
    EXPECT_NEAR(rad2deg(az_at_best), 0.0, 0.5);
}

TEST(SolarGeometry, MorningAzimuthIsEastNegative) {
    const auto s = solar_position({56.49, 9.57}, make_utc(2015, 6, 21, 6, 0));
    EXPECT_LT(s.azimuth, 0.0);
    const Vec3 v = sun_vector(s);
    EXPECT_GT(v.x, 0.0);  // east
}

TEST(SolarGeometry, RejectsYearsOutsideRange) {
    EXPECT_THROW(solar_position({0, 0}, make_utc(1900, 1, 1)), std::out_of_range);
    EXPECT_THROW(solar_position({95, 0}, make_utc(2015, 1, 1)), std::invalid_argument);
}

TEST(SolarGeometry, PlaneNormalAndIncidence) {
    const auto sun = SolarPosition::from_altitude_azimuth(deg2rad(30.0), 0.0);
    // Plane tilted to face the sun squarely.
    const PlaneOrientation facing{deg2rad(60.0), 0.0};
    EXPECT_NEAR(cos_incidence(sun, facing), 1.0, 1e-12);
    EXPECT_NEAR(incidence_angle(sun, facing), 0.0, 1e-6);
    // Horizontal plane: cos(theta) = sin(altitude).
    EXPECT_NEAR(cos_incidence(sun, {0.0, 0.0}), 0.5, 1e-12);
    // East-facing vertical plane, sun due south: grazing.
    EXPECT_NEAR(cos_incidence(sun, {kPi / 2, -kPi / 2}), 0.0, 1e-12);
    const Vec3 n = plane_normal({deg2rad(90.0), -kPi / 2});
    EXPECT_NEAR(n.x, 1.0, 1e-12);
}

TEST(SolarGeometry, EccentricityCorrection) {
    EXPECT_NEAR(eccentricity_correction(3), 1.0350, 0.001);    // perihelion
    EXPECT_NEAR(eccentricity_correction(185), 0.9666, 0.001);  // aphelion
    double mean = 0.0;
    for (int d = 1; d <= 365; ++d) {
        mean += eccentricity_correction(d) / 365.0;
    }
    EXPECT_NEAR(mean, 1.0, 1e-3);
}

TEST(SolarGeometry, ExtraterrestrialHorizontal) {
    const auto sun = SolarPosition::from_altitude_azimuth(deg2rad(30.0), 0.0);
    EXPECT_NEAR(extraterrestrial_horizontal(sun, 80), kSolarConstant * eccentricity_correction(80) * 0.5, 1e-9);
    EXPECT_EQ(extraterrestrial_horizontal(SolarPosition::from_altitude_azimuth(-0.1, 0.0), 80), 0.0);
}

// The tracker angle must maximise cos(incidence) over all rotations; checked
// by dense search instead of the closed form.
TEST(SolarGeometry, TrackerRotationMaximisesIncidence) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> alt(deg2rad(0.5), deg2rad(89.0));
    std::uniform_real_distribution<double> az(-kPi, kPi);
    for (int i = 0; i < 500; ++i) {
        const auto sun = SolarPosition::from_altitude_azimuth(alt(rng), az(rng));
        const Vec3 s = oracle::sun_direction(sun.altitude, sun.azimuth);
        double best = -2.0;
        double best_r = 0.0;
        for (int k = -9000; k <= 9000; ++k) {
            const double r = deg2rad(k / 100.0);
            // Normal of a N-S axis collector rotated by r (positive faces west).
            const Vec3 n{-std::sin(r), 0.0, std::cos(r)};
            const double c = dot(n, s);
            if (c > best) {
                best = c;
                best_r = r;
            }
        }
        const double r = tracker_rotation(sun);
        EXPECT_NEAR(r, best_r, deg2rad(0.011));
        EXPECT_NEAR(cos_incidence(sun, tracking_orientation(sun)), best, 1e-6);
    }
}

TEST(SolarGeometry, TrackerLimitsAndParking) {
    const auto low_west = SolarPosition::from_altitude_azimuth(deg2rad(5.0), deg2rad(90.0));
    EXPECT_NEAR(rad2deg(tracker_rotation(low_west)), 85.0, 1e-9);
    EXPECT_NEAR(rad2deg(tracker_rotation(low_west, deg2rad(60.0))), 60.0, 1e-9);
    const auto down = SolarPosition::from_altitude_azimuth(deg2rad(-5.0), deg2rad(90.0));
    EXPECT_EQ(tracker_rotation(down), 0.0);
    const auto o = rotation_to_orientation(deg2rad(-30.0));
    EXPECT_NEAR(rad2deg(o.tilt), 30.0, 1e-12);
    EXPECT_NEAR(rad2deg(o.azimuth), -90.0, 1e-12);
}

TEST(SolarGeometry, OptimalTilt) {
    EXPECT_NEAR(optimal_tilt_deg(56.49), 42.678, 1e-3);
    EXPECT_NEAR(optimal_tilt_deg(-30.0), 24.4, 1e-9);
}

TEST(SolarGeometry, ReferenceExamples) {
    // Equator at the March equinox, near solar noon.
    double best = -1.0;
    for (int m = 11 * 60; m < 13 * 60; ++m) {
        best = std::max(best, solar_position({0.0, 0.0}, make_utc(2015, 3, 20) + std::chrono::minutes{m}).altitude);
    }
    EXPECT_NEAR(rad2deg(best), 90.0, 0.5);
    // Local midnight in January at Foulum.
    EXPECT_LT(solar_position({56.49, 9.57}, make_utc(2015, 1, 15, 23, 20)).altitude, 0.0);
    // beta 45 deg facing south, sun at 45 deg altitude due south.
    const auto sun = SolarPosition::from_altitude_azimuth(deg2rad(45.0), 0.0);
    EXPECT_NEAR(incidence_angle(sun, {deg2rad(45.0), 0.0}), 0.0, 1e-6);
    // Horizontal plane: incidence equals the zenith angle.
    EXPECT_NEAR(incidence_angle(sun, {0.0, 0.0}), sun.zenith, 1e-12);
    // Top of atmosphere with no eccentricity correction.
    EXPECT_NEAR(kSolarConstant * std::sin(kPi / 2), 1361.0, 1e-9);
    EXPECT_NEAR(kSolarConstant * std::sin(deg2rad(30.0)), 680.5, 1e-9);
}

TEST(SolarGeometry, TrackerReferenceExamples) {
    const auto east = SolarPosition::from_altitude_azimuth(deg2rad(45.0), -kPi / 2);
    EXPECT_NEAR(rad2deg(tracker_rotation(east)), -45.0, 0.1);
    EXPECT_LT(plane_normal(tracking_orientation(east)).x, 0.0 + 1.0);
    EXPECT_GT(plane_normal(tracking_orientation(east)).x, 0.0);  // faces east
    EXPECT_NEAR(tracker_rotation(SolarPosition::from_altitude_azimuth(deg2rad(30.0), 0.0)), 0.0, 1e-12);
    EXPECT_NEAR(tracker_rotation(SolarPosition::from_altitude_azimuth(kPi / 2, 0.3)), 0.0, 1e-12);
    EXPECT_EQ(tracking_orientation(SolarPosition::from_altitude_azimuth(-0.2, 1.0)).tilt, 0.0);
}
