#pragma once

#include "apv/sky_irradiance.hpp"

#include <optional>

namespace apv {

// Huld et al. (2011) relative-efficiency coefficients.
struct HuldCoefficients {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k4 = 0.0;
    double k5 = 0.0;
    double k6 = 0.0;

    // Published crystalline-silicon set (also used by PVGIS).
    static HuldCoefficients crystalline_silicon() {
        return {-0.017237, -0.040465, -0.004702, 0.000149, 0.000170, 0.000005};
    }
};

struct PanelModel {
    double stc_efficiency = 0.20;     // P_STC per m² of collector = efficiency * G_STC
    double g_stc = 1000.0;            // W/m²
    double t_stc = 25.0;              // °C
    int total_blocks = 3;             // bypass-diode blocks per collector
    double angular_loss_coeff = 0.17; // a_r
    double u0 = 26.92;                // W/m²K
    double u1 = 6.24;                 // W s/m³K
    HuldCoefficients huld = HuldCoefficients::crystalline_silicon();
    double system_efficiency = 0.86;  // eta_sys
    double wind_shear_exponent = 2.0;
    double wind_reference_height = 10.0;  // m

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
    double stc_power(double collector_area) const { return stc_efficiency * g_stc * collector_area; }
};

// (1 - F_ES) = (1 - F_GS)(1 - N_SB / (N_TB + 1)), clamped to [0, 1].
double effective_shading_factor(double geometric, int shaded_blocks, int total_blocks);

// Martin & Ruiz angular loss; 1 for theta >= 90 deg.
double angular_loss(double incidence, double alpha_r);

double wind_at_module(double wind_10m, double module_height, double exponent = 2.0, double reference_height = 10.0);

double cell_temperature(double air_temperature, double irradiance, double module_wind, double u0 = 26.92,
                        double u1 = 6.24);

// Relative efficiency at irradiance g and cell temperature; >= 0.
// Callers short-circuit g <= 0 (returns 0 there).
double relative_efficiency(double irradiance, double cell_temp, const HuldCoefficients& k, double g_stc = 1000.0,
                           double t_stc = 25.0);

// One side of a collector: transposed irradiance, shading, incidence angle.
struct FaceInput {
    PlaneIrradiance irradiance;
    double effective_shading = 0.0;  // F_ES
    double incidence = 0.0;          // rad
};

// Bracket of the power equation for one face:
// (B + D_circ)(1 - F_ES)(1 - AL) + D_iso + R.
double effective_face_irradiance(const FaceInput& face, double alpha_r);

struct CollectorPower {
    double power = 0.0;                  // W
    double cell_temperature = 0.0;       // °C
    double relative_efficiency = 0.0;
    double effective_irradiance = 0.0;   // front + phi * rear, W/m²
};

// Hourly DC power of one collector, with an optional rear face weighted by `bifaciality`.
// Cell temperature and efficiency use the combined effective irradiance.
CollectorPower collector_power(const FaceInput& front, const std::optional<FaceInput>& rear, double bifaciality,
                               const PanelModel& panel, double stc_power, double air_temperature,
                               double module_wind);

// Same, with the cell temperature given instead of derived.
CollectorPower collector_power_at(const FaceInput& front, const std::optional<FaceInput>& rear, double bifaciality,
                                  const PanelModel& panel, double stc_power, double cell_temp);

}  // namespace apv
