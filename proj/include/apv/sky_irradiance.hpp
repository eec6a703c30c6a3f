#pragma once

#include "apv/solar_geometry.hpp"
#include "apv/time.hpp"

namespace apv {

// One hour of horizontal weather, left-labeled: covers [time, time + 1h).
struct IrradianceSample {
    UtcTime time{};
    double direct_horizontal = 0.0;   // B0, W/m²
    double diffuse_horizontal = 0.0;  // D0, W/m²
    double global_horizontal = 0.0;   // G0, W/m²
    double air_temperature = 0.0;     // °C
    double wind_speed_10m = 0.0;      // m/s
};

// Per-hour sky descriptors shared by every plane evaluated in that hour.
struct SkyParams {
    double anisotropy = 0.0;          // k1
    double diffuse_fraction = 1.0;    // F
    double horizon_brightening = 1.0; // k_hori
    double albedo = 0.2;              // rho
};

struct PlaneIrradiance {
    double direct = 0.0;       // B
    double circumsolar = 0.0;  // D_circ
    double isotropic = 0.0;    // D_iso
    double reflected = 0.0;    // R
    double global = 0.0;       // B + D_circ + D_iso + R

    // Components that rows and ground shadows can block.
    double beam_like() const { return direct + circumsolar; }
};

struct DiffuseComponents {
    double circumsolar = 0.0;
    double isotropic = 0.0;
};

// Below this altitude the 1/sin(altitude) terms are set to zero.
inline constexpr double kMinBeamAltitude = deg2rad(1.0);

inline constexpr double kDefaultAlbedo = 0.2;

double direct_on_plane(const IrradianceSample& sample, const SolarPosition& sun, const PlaneOrientation& plane);

// k1 = B0 / B0_toa clamped to [0, 1]; 0 when the sun is down.
double anisotropy_index(const IrradianceSample& sample, double toa_horizontal);

double diffuse_fraction(const IrradianceSample& sample);

// k_hori = 1 + sqrt(1 - F) sin^3(altitude / 2), altitude < 0 treated as 0.
double horizon_brightening(double diffuse_fraction, double altitude);

DiffuseComponents diffuse_on_plane(const IrradianceSample& sample, const SolarPosition& sun,
                                   const PlaneOrientation& plane, double k1, double k_hori);

double albedo_on_plane(const IrradianceSample& sample, const PlaneOrientation& plane, double rho);

PlaneIrradiance plane_global(double direct, double circumsolar, double isotropic, double reflected);

SkyParams sky_params(const IrradianceSample& sample, const SolarPosition& sun, double toa_horizontal,
                     double albedo = kDefaultAlbedo);

// Full transposition of one sample onto one plane.
PlaneIrradiance transpose(const IrradianceSample& sample, const SolarPosition& sun, const PlaneOrientation& plane,
                          const SkyParams& sky);

}  // namespace apv
