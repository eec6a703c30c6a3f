#include "apv/indicators.hpp"

#include <fmt/format.h>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace apv {

namespace {

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double mean_of(std::span<const double> v) {
    if (v.empty()) {
        throw std::invalid_argument("mean of an empty price series");
    }
    return sum(v) / static_cast<double>(v.size());
}

}  // namespace

double PriceSeries::mean() const { return mean_of(prices); }

double capacity_density(double capacity_w, double field_area_m2) {
    if (!(field_area_m2 > 0.0)) {
        throw std::invalid_argument("field area must be > 0");
    }
    return capacity_w / field_area_m2;
}

double electricity_yield(std::span<const double> energy_wh, double field_area_m2) {
    if (!(field_area_m2 > 0.0)) {
        throw std::invalid_argument("field area must be > 0");
    }
    return sum(energy_wh) / 1000.0 / field_area_m2;
}

double price_weighted_yield(std::span<const double> energy_wh, std::span<const double> prices,
                            double field_area_m2) {
    if (energy_wh.size() != prices.size()) {
        throw std::invalid_argument(
            fmt::format("price series length {} does not match production length {}", prices.size(), energy_wh.size()));
    }
    if (!(field_area_m2 > 0.0)) {
        throw std::invalid_argument("field area must be > 0");
    }
    const double avg = mean_of(prices);
    if (avg == 0.0) {
        throw std::invalid_argument("mean electricity price is zero; price weighting undefined");
    }
    double weighted = 0.0;
    for (std::size_t h = 0; h < energy_wh.size(); ++h) {
        weighted += energy_wh[h] * prices[h] / avg;
    }
    return weighted / 1000.0 / field_area_m2;
}

double shadow_losses(std::span<const double> energy_wh, std::span<const double> noshadow_wh) {
    if (energy_wh.size() != noshadow_wh.size()) {
        throw std::invalid_argument("shadow-loss series are not aligned");
    }
    const double ref = sum(noshadow_wh);
    if (ref == 0.0) {
        return 0.0;
    }
    return 100.0 * (ref - sum(energy_wh)) / ref;
}

double specific_yield(std::span<const double> energy_wh, double capacity_w) {
    if (!(capacity_w > 0.0)) {
        throw std::invalid_argument("installed capacity must be > 0");
    }
    return sum(energy_wh) / capacity_w;
}

IndicatorReport make_report(std::span<const double> energy_wh, std::span<const double> noshadow_wh,
                            std::span<const double> prices, double capacity_w, double field_area_m2) {
    IndicatorReport r;
    r.capacity_density = capacity_density(capacity_w, field_area_m2);
    r.electricity_yield = electricity_yield(energy_wh, field_area_m2);
    r.price_weighted_yield = prices.empty() ? std::numeric_limits<double>::quiet_NaN()
                                            : price_weighted_yield(energy_wh, prices, field_area_m2);
    r.shadow_losses = shadow_losses(energy_wh, noshadow_wh);
    r.specific_yield = specific_yield(energy_wh, capacity_w);
    return r;
}

}  // namespace apv
