#pragma once

#include "apv/indicators.hpp"
#include "apv/sky_irradiance.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apv {

// Hourly weather, strictly increasing, one-hour steps, no gaps.
struct WeatherTable {
    std::vector<IrradianceSample> samples;
    std::size_t repaired_rows = 0;  // rows whose G0 was replaced by B0 + D0

    std::vector<UtcTime> times() const;
};

// Largest accepted |G0 - (B0 + D0)| before G0 is recomputed, W/m².
inline constexpr double kClosureTolerance = 1.0;

// CSV with header time,bhi,dhi,ghi,temp_air,wind10 (any column order, extra
// columns ignored). Times are UTC. Throws InputError naming the line for
// malformed rows and missing columns, and the missing timestamps for gaps.
WeatherTable parse_weather(std::string_view text, std::string_view source = "weather");
WeatherTable ingest_weather(const std::string& path);

// Prices as read, timestamps converted to UTC by subtracting the market's
// offset from UTC in hours.
PriceSeries parse_prices(std::string_view text, double utc_offset_hours, std::string_view source = "prices");
PriceSeries ingest_prices(const std::string& path, double utc_offset_hours = 0.0);

// Picks the price for every production timestamp. Throws InputError naming
// the first timestamp without a price.
PriceSeries align_prices(const PriceSeries& prices, std::span<const UtcTime> times);

}  // namespace apv
