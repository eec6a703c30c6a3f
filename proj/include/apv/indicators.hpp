#pragma once

#include "apv/time.hpp"

#include <span>
#include <string>
#include <vector>

namespace apv {

// Hourly spot prices aligned one-to-one with a production series.
struct PriceSeries {
    std::vector<UtcTime> times;
    std::vector<double> prices;  // currency/MWh; may be negative

    double mean() const;
    std::size_t size() const { return prices.size(); }
};

struct IndicatorReport {
    double capacity_density = 0.0;      // W/m²
    double electricity_yield = 0.0;     // kWh/m²
    double price_weighted_yield = 0.0;  // kWh/m²; NaN when no prices were supplied
    double shadow_losses = 0.0;         // %
    double specific_yield = 0.0;        // kWh/kW
};

// C / A_f. Throws std::invalid_argument for A_f <= 0.
double capacity_density(double capacity_w, double field_area_m2);

// Sum of E(h) [Wh] / A_f, reported in kWh/m².
double electricity_yield(std::span<const double> energy_wh, double field_area_m2);

// Sum of E(h) p(h)/<p> / A_f in kWh/m². Throws std::invalid_argument for
// misaligned series or a zero mean price.
double price_weighted_yield(std::span<const double> energy_wh, std::span<const double> prices,
                            double field_area_m2);

// 100 (sum E0 - sum E) / sum E0; 0 when sum E0 is 0.
double shadow_losses(std::span<const double> energy_wh, std::span<const double> noshadow_wh);

// Sum of E(h) / C in kWh/kW. Throws std::invalid_argument for C <= 0.
double specific_yield(std::span<const double> energy_wh, double capacity_w);

// All five indicators; `prices` may be empty.
IndicatorReport make_report(std::span<const double> energy_wh, std::span<const double> noshadow_wh,
                            std::span<const double> prices, double capacity_w, double field_area_m2);

}  // namespace apv
