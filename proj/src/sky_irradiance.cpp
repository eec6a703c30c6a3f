#include "apv/sky_irradiance.hpp"

#include <algorithm>
#include <cmath>

namespace apv {

namespace {

// max(0, cos theta) / sin(altitude), or 0 inside the low-sun guard band.
double beam_ratio(const SolarPosition& sun, const PlaneOrientation& plane) {
    if (sun.altitude <= kMinBeamAltitude) {
        return 0.0;
    }
    return std::max(0.0, cos_incidence(sun, plane)) / std::sin(sun.altitude);
}

}  // namespace

double direct_on_plane(const IrradianceSample& sample, const SolarPosition& sun, const PlaneOrientation& plane) {
    if (plane.tilt == 0.0) {
        // Horizontal identity; avoids cos/sin round-off.
        return sun.altitude > kMinBeamAltitude ? sample.direct_horizontal : 0.0;
    }
    return sample.direct_horizontal * beam_ratio(sun, plane);
}

double anisotropy_index(const IrradianceSample& sample, double toa_horizontal) {
    if (!(toa_horizontal > 0.0)) {
        return 0.0;
    }
    return std::clamp(sample.direct_horizontal / toa_horizontal, 0.0, 1.0);
}

double diffuse_fraction(const IrradianceSample& sample) {
    if (sample.global_horizontal > 0.0) {
        return std::clamp(sample.diffuse_horizontal / sample.global_horizontal, 0.0, 1.0);
    }
    return 1.0;
}

double horizon_brightening(double diffuse_fraction, double altitude) {
    const double f = std::clamp(diffuse_fraction, 0.0, 1.0);
    const double s = std::sin(std::max(0.0, altitude) / 2);
    return 1.0 + std::sqrt(1.0 - f) * s * s * s;
}

DiffuseComponents diffuse_on_plane(const IrradianceSample& sample, const SolarPosition& sun,
                                   const PlaneOrientation& plane, double k1, double k_hori) {
    DiffuseComponents d;
    const double ratio = plane.tilt == 0.0 ? (sun.altitude > kMinBeamAltitude ? 1.0 : 0.0) : beam_ratio(sun, plane);
    d.circumsolar = k1 * sample.diffuse_horizontal * ratio;
    d.isotropic = k_hori * (1.0 - k1) * sample.diffuse_horizontal * (1.0 + std::cos(plane.tilt)) / 2;
    return d;
}

double albedo_on_plane(const IrradianceSample& sample, const PlaneOrientation& plane, double rho) {
    if (plane.tilt == 0.0) {
        return 0.0;
    }
    return rho * sample.global_horizontal * (1.0 - std::cos(plane.tilt)) / 2;
}

PlaneIrradiance plane_global(double direct, double circumsolar, double isotropic, double reflected) {
    PlaneIrradiance p;
    p.direct = direct;
    p.circumsolar = circumsolar;
    p.isotropic = isotropic;
    p.reflected = reflected;
    p.global = direct + circumsolar + isotropic + reflected;
    return p;
}

SkyParams sky_params(const IrradianceSample& sample, const SolarPosition& sun, double toa_horizontal, double albedo) {
    SkyParams sky;
    sky.anisotropy = sun.altitude > 0.0 ? anisotropy_index(sample, toa_horizontal) : 0.0;
    sky.diffuse_fraction = diffuse_fraction(sample);
    sky.horizon_brightening = horizon_brightening(sky.diffuse_fraction, sun.altitude);
    sky.albedo = albedo;
    return sky;
}

PlaneIrradiance transpose(const IrradianceSample& sample, const SolarPosition& sun, const PlaneOrientation& plane,
                          const SkyParams& sky) {
    const double b = direct_on_plane(sample, sun, plane);
    const auto d = diffuse_on_plane(sample, sun, plane, sky.anisotropy, sky.horizon_brightening);
    const double r = albedo_on_plane(sample, plane, sky.albedo);
    return plane_global(b, d.circumsolar, d.isotropic, r);
}

}  // namespace apv
