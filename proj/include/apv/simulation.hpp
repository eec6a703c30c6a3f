#pragma once

#include "apv/layout.hpp"
#include "apv/pv_electrical.hpp"
#include "apv/sky_irradiance.hpp"

#include <array>
#include <span>
#include <vector>

namespace apv {

struct HourlyOutput {
    UtcTime time{};
    double power = 0.0;                 // W, whole field
    double power_noshadow = 0.0;        // W, same hour with F_ES = 0 everywhere
    double cell_temperature = 0.0;      // °C, row mean
    double relative_efficiency = 0.0;   // row mean
    double front_effective_shading = 0.0;  // F_ES row mean, 0 without directional light
    double rear_effective_shading = 0.0;
    double effective_irradiance = 0.0;  // W/m², row mean of front + phi * rear
};

struct SimulationOptions {
    double albedo = kDefaultAlbedo;
    unsigned threads = 1;
    bool require_full_year = true;
};

struct AnnualSimulation {
    std::vector<HourlyOutput> hours;
    double capacity_w = 0.0;  // installed P_STC of all rows

    double energy_wh() const;
    double energy_noshadow_wh() const;
    std::vector<double> energy_series_wh() const;
    std::vector<double> noshadow_series_wh() const;
    // Mean daily energy per installed kW for each calendar month, kWh/kW/day.
    std::array<double, 12> monthly_daily_specific_yield() const;
};

// Throws InputError listing missing timestamps when the series has gaps or is
// not strictly hourly; with require_full_year also when it does not cover
// exactly one calendar year.
void check_hourly_series(std::span<const IrradianceSample> samples, bool require_full_year);

// Hourly field power for one layout. Deterministic regardless of threads.
AnnualSimulation simulate_year(const Layout& layout, std::span<const IrradianceSample> samples,
                               const GeoLocation& loc, const PanelModel& panel, const SimulationOptions& options = {});

}  // namespace apv
