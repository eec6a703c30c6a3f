#pragma once

#include "apv/geometry.hpp"
#include "apv/time.hpp"

#include <numbers>

namespace apv {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double deg2rad(double d) { return d * kPi / 180.0; }
inline constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

// Solar constant, W/m².
inline constexpr double kSolarConstant = 1361.0;

// Azimuths everywhere in this library: 0 = south, positive toward west,
// range (-pi, pi]. Local frame: x east, y north, z up.

struct GeoLocation {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;

    // Throws std::invalid_argument when |lat| > 90 or |lon| > 180.
    void validate() const;
};

struct SolarPosition {
    double altitude = 0.0;  // rad above horizon
    double azimuth = 0.0;   // rad
    double zenith = 0.0;    // rad, pi/2 - altitude

    static SolarPosition from_altitude_azimuth(double altitude, double azimuth);
};

struct PlaneOrientation {
    double tilt = 0.0;     // rad from horizontal
    double azimuth = 0.0;  // rad, direction the surface faces
};

// NOAA / Meeus low-order solar coordinates: declination, equation of time and
// hour angle. Accurate to ~0.01 deg for 1950-2100; no refraction.
SolarPosition solar_position(const GeoLocation& loc, UtcTime time);

// Unit vector toward the sun in the local (east, north, up) frame.
Vec3 sun_vector(const SolarPosition& sun);

// Unit surface normal of a plane in the local frame.
Vec3 plane_normal(const PlaneOrientation& plane);

double cos_incidence(const SolarPosition& sun, const PlaneOrientation& plane);

// Angle between surface normal and sun vector, in [0, pi].
double incidence_angle(const SolarPosition& sun, const PlaneOrientation& plane);

// Spencer (1971) orbital eccentricity correction factor.
double eccentricity_correction(int day_of_year, int days_in_year = 365);

double extraterrestrial_horizontal(const SolarPosition& sun, int day_of_year, int days_in_year = 365);
double extraterrestrial_horizontal(const GeoLocation& loc, UtcTime time);

// Signed rotation of a horizontal north-south tracker axis; positive means
// the collector faces west. Parks at 0 when the sun is below the horizon.
// The result is clamped to +/- max_rotation.
double tracker_rotation(const SolarPosition& sun, double max_rotation = kPi / 2);

PlaneOrientation tracking_orientation(const SolarPosition& sun, double max_rotation = kPi / 2);

// Converts a signed tracker rotation to a plane orientation.
PlaneOrientation rotation_to_orientation(double rotation);

// Empirical annual-optimum tilt for a fixed south-facing plane
// (Lorenzo: 3.7 + 0.69 |latitude|), in degrees.
double optimal_tilt_deg(double latitude_deg);

}  // namespace apv
