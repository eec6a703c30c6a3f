#include "apv/solar_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace apv {

void GeoLocation::validate() const {
    if (!(std::abs(latitude_deg) <= 90.0) || !(std::abs(longitude_deg) <= 180.0)) {
        throw std::invalid_argument(
            fmt::format("invalid location lat={} lon={} (need |lat|<=90, |lon|<=180)", latitude_deg, longitude_deg));
    }
}

SolarPosition SolarPosition::from_altitude_azimuth(double altitude, double azimuth) {
    SolarPosition s;
    s.altitude = altitude;
    s.azimuth = azimuth;
    s.zenith = kPi / 2 - altitude;
    return s;
}

namespace {

double wrap_azimuth(double a) {
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) {
        a += 2 * kPi;
    }
    return a;
}

}  // namespace

SolarPosition solar_position(const GeoLocation& loc, UtcTime time) {
    loc.validate();
    const auto c = civil_fields(time);
    if (c.year < 1950 || c.year > 2100) {
        throw std::out_of_range(fmt::format("solar_position: year {} outside 1950-2100", c.year));
    }

    const double unix_seconds = static_cast<double>(time.time_since_epoch().count());
    const double jd = unix_seconds / 86400.0 + 2440587.5;
    const double t = (jd - 2451545.0) / 36525.0;

    const double mean_long = std::fmod(280.46646 + t * (36000.76983 + t * 0.0003032), 360.0);
    const double mean_anom = 357.52911 + t * (35999.05029 - 0.0001537 * t);
    const double ecc = 0.016708634 - t * (0.000042037 + 0.0000001267 * t);
    const double m = deg2rad(mean_anom);
    const double center = std::sin(m) * (1.914602 - t * (0.004817 + 0.000014 * t)) +
                          std::sin(2 * m) * (0.019993 - 0.000101 * t) + std::sin(3 * m) * 0.000289;
    const double true_long = mean_long + center;
    const double omega = deg2rad(125.04 - 1934.136 * t);
    const double app_long = deg2rad(true_long - 0.00569 - 0.00478 * std::sin(omega));
    const double obliq_mean = 23.0 + (26.0 + (21.448 - t * (46.815 + t * (0.00059 - t * 0.001813))) / 60.0) / 60.0;
    const double obliq = deg2rad(obliq_mean + 0.00256 * std::cos(omega));

    const double decl = std::asin(std::sin(obliq) * std::sin(app_long));

    const double y = std::pow(std::tan(obliq / 2), 2);
    const double l0 = deg2rad(mean_long);
    const double eot_min = 4.0 * rad2deg(y * std::sin(2 * l0) - 2 * ecc * std::sin(m) +
                                         4 * ecc * y * std::sin(m) * std::cos(2 * l0) -
                                         0.5 * y * y * std::sin(4 * l0) - 1.25 * ecc * ecc * std::sin(2 * m));

    const double minutes_of_day = c.hour * 60.0 + c.minute + c.second / 60.0;
    const double true_solar_min = minutes_of_day + eot_min + 4.0 * loc.longitude_deg;
    const double hour_angle = deg2rad(true_solar_min / 4.0 - 180.0);

    const double lat = deg2rad(loc.latitude_deg);
    const double sin_alt =
        std::clamp(std::sin(lat) * std::sin(decl) + std::cos(lat) * std::cos(decl) * std::cos(hour_angle), -1.0, 1.0);
    const double altitude = std::asin(sin_alt);
    // Meeus 13.5: azimuth measured from south, positive westward.
    const double azimuth = std::atan2(std::sin(hour_angle),
                                      std::cos(hour_angle) * std::sin(lat) - std::tan(decl) * std::cos(lat));
    return SolarPosition::from_altitude_azimuth(altitude, wrap_azimuth(azimuth));
}

Vec3 sun_vector(const SolarPosition& sun) {
    const double ca = std::cos(sun.altitude);
    return {-ca * std::sin(sun.azimuth), -ca * std::cos(sun.azimuth), std::sin(sun.altitude)};
}

Vec3 plane_normal(const PlaneOrientation& plane) {
    const double sb = std::sin(plane.tilt);
    return {-sb * std::sin(plane.azimuth), -sb * std::cos(plane.azimuth), std::cos(plane.tilt)};
}

double cos_incidence(const SolarPosition& sun, const PlaneOrientation& plane) {
    return std::clamp(dot(sun_vector(sun), plane_normal(plane)), -1.0, 1.0);
}

double incidence_angle(const SolarPosition& sun, const PlaneOrientation& plane) {
    return std::acos(cos_incidence(sun, plane));
}

double eccentricity_correction(int day_of_year, int days_in_year) {
    const double g = 2 * kPi * (day_of_year - 1) / static_cast<double>(days_in_year);
    return 1.000110 + 0.034221 * std::cos(g) + 0.001280 * std::sin(g) + 0.000719 * std::cos(2 * g) +
           0.000077 * std::sin(2 * g);
}

double extraterrestrial_horizontal(const SolarPosition& sun, int day_of_year, int days_in_year) {
    return kSolarConstant * eccentricity_correction(day_of_year, days_in_year) * std::max(0.0, std::sin(sun.altitude));
}

double extraterrestrial_horizontal(const GeoLocation& loc, UtcTime time) {
    const auto c = civil_fields(time);
    return extraterrestrial_horizontal(solar_position(loc, time), c.day_of_year, is_leap_year(c.year) ? 366 : 365);
}

double tracker_rotation(const SolarPosition& sun, double max_rotation) {
    if (sun.altitude <= 0.0) {
        return 0.0;
    }
    // Project the sun vector onto the east-up plane; the normal follows it.
    const Vec3 s = sun_vector(sun);
    const double rotation = std::atan2(-s.x, s.z);
    return std::clamp(rotation, -max_rotation, max_rotation);
}

PlaneOrientation rotation_to_orientation(double rotation) {
    if (rotation == 0.0) {
        return {0.0, 0.0};
    }
    return {std::abs(rotation), rotation > 0.0 ? kPi / 2 : -kPi / 2};
}

PlaneOrientation tracking_orientation(const SolarPosition& sun, double max_rotation) {
    return rotation_to_orientation(tracker_rotation(sun, max_rotation));
}

double optimal_tilt_deg(double latitude_deg) { return 3.7 + 0.69 * std::abs(latitude_deg); }

}  // namespace apv
