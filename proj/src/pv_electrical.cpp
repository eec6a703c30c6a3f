#include "apv/pv_electrical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apv {

void PanelModel::validate() const {
    if (!(stc_efficiency > 0.0 && stc_efficiency <= 1.0)) {
        throw std::invalid_argument("panel STC efficiency must be within (0, 1]");
    }
    if (!(system_efficiency > 0.0 && system_efficiency <= 1.0)) {
        throw std::invalid_argument("system efficiency must be within (0, 1]");
    }
    if (!(angular_loss_coeff > 0.0)) {
        throw std::invalid_argument("angular loss coefficient must be > 0");
    }
    if (total_blocks < 1) {
        throw std::invalid_argument("a collector needs at least one bypass block");
    }
    if (!(g_stc > 0.0) || !(u0 > 0.0) || !(u1 >= 0.0) || !(wind_reference_height > 0.0)) {
        throw std::invalid_argument("non-physical panel thermal/STC parameters");
    }
}

double effective_shading_factor(double geometric, int shaded_blocks, int total_blocks) {
    const double fgs = std::clamp(geometric, 0.0, 1.0);
    const int nsb = std::clamp(shaded_blocks, 0, total_blocks);
    const double unshaded = (1.0 - fgs) * (1.0 - static_cast<double>(nsb) / (total_blocks + 1));
    return std::clamp(1.0 - unshaded, 0.0, 1.0);
}

double angular_loss(double incidence, double alpha_r) {
    const double c = std::cos(incidence);
    if (c <= 0.0) {
        return 1.0;
    }
    return 1.0 - (1.0 - std::exp(-c / alpha_r)) / (1.0 - std::exp(-1.0 / alpha_r));
}

double wind_at_module(double wind_10m, double module_height, double exponent, double reference_height) {
    return std::pow(module_height / reference_height, exponent) * wind_10m;
}

double cell_temperature(double air_temperature, double irradiance, double module_wind, double u0, double u1) {
    return air_temperature + irradiance / (u0 + u1 * module_wind);
}

double relative_efficiency(double irradiance, double cell_temp, const HuldCoefficients& k, double g_stc,
                           double t_stc) {
    if (!(irradiance > 0.0)) {
        return 0.0;
    }
    const double lg = std::log(irradiance / g_stc);
    const double t = cell_temp - t_stc;
    const double eta =
        1.0 + k.k1 * lg + k.k2 * lg * lg + k.k3 * t + k.k4 * t * lg + k.k5 * t * lg * lg + k.k6 * t * t;
    return std::max(0.0, eta);
}

double effective_face_irradiance(const FaceInput& face, double alpha_r) {
    const auto& g = face.irradiance;
    const double directional = g.beam_like();
    double out = g.isotropic + g.reflected;
    if (directional > 0.0) {
        out += directional * (1.0 - face.effective_shading) * (1.0 - angular_loss(face.incidence, alpha_r));
    }
    return out;
}

namespace {

double combined_irradiance(const FaceInput& front, const std::optional<FaceInput>& rear, double bifaciality,
                           double alpha_r) {
    double g = effective_face_irradiance(front, alpha_r);
    if (rear && bifaciality > 0.0) {
        g += bifaciality * effective_face_irradiance(*rear, alpha_r);
    }
    return g;
}

CollectorPower finish(double g_eff, double cell_temp, const PanelModel& panel, double stc_power) {
    CollectorPower out;
    out.effective_irradiance = g_eff;
    out.cell_temperature = cell_temp;
    if (g_eff > 0.0) {
        out.relative_efficiency = relative_efficiency(g_eff, cell_temp, panel.huld, panel.g_stc, panel.t_stc);
        out.power = stc_power * out.relative_efficiency * panel.system_efficiency * g_eff / panel.g_stc;
    }
    return out;
}

}  // namespace

CollectorPower collector_power(const FaceInput& front, const std::optional<FaceInput>& rear, double bifaciality,
                               const PanelModel& panel, double stc_power, double air_temperature,
                               double module_wind) {
    const double g_eff = combined_irradiance(front, rear, bifaciality, panel.angular_loss_coeff);
    const double t_cell = cell_temperature(air_temperature, g_eff, module_wind, panel.u0, panel.u1);
    return finish(g_eff, t_cell, panel, stc_power);
}

CollectorPower collector_power_at(const FaceInput& front, const std::optional<FaceInput>& rear, double bifaciality,
                                  const PanelModel& panel, double stc_power, double cell_temp) {
    const double g_eff = combined_irradiance(front, rear, bifaciality, panel.angular_loss_coeff);
    return finish(g_eff, cell_temp, panel, stc_power);
}

}  // namespace apv
