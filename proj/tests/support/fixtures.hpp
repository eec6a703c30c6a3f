#pragma once

#include "apv/scenario.hpp"
#include "apv/weather_io.hpp"

#include <string>
#include <vector>

namespace apv::fixture {

inline std::string path(const std::string& name) { return std::string(APV_FIXTURE_DIR) + "/" + name; }

// Foulum 2015 weather year, loaded once per process.
inline const std::vector<IrradianceSample>& foulum_year() {
    static const std::vector<IrradianceSample> samples =
        select_year(ingest_weather(path("foulum_2015_weather.csv")), 2015);
    return samples;
}

inline const GeoLocation& foulum() {
    static const GeoLocation loc{56.49, 9.57};
    return loc;
}

// DK1-shaped prices in UTC+1 market time, aligned with foulum_year().
inline const std::vector<double>& dk1_prices() {
    static const std::vector<double> prices = [] {
        std::vector<UtcTime> times;
        for (const auto& s : foulum_year()) {
            times.push_back(s.time);
        }
        return align_prices(ingest_prices(path("dk1_2015_prices.csv"), 1.0), times).prices;
    }();
    return prices;
}

// A few consecutive days starting at the given date, clear-sky-like shape.
inline std::vector<IrradianceSample> synthetic_days(int year, unsigned month, unsigned day, int days,
                                                    const GeoLocation& loc) {
    std::vector<IrradianceSample> out;
    const auto start = make_utc(year, month, day);
    for (int h = 0; h < 24 * days; ++h) {
        IrradianceSample s;
        s.time = start + std::chrono::hours{h};
        const auto sun = solar_position(loc, s.time + std::chrono::minutes{30});
        if (sun.altitude > 0.0) {
            const double sa = std::sin(sun.altitude);
            s.direct_horizontal = 750.0 * sa * sa;
            s.diffuse_horizontal = 60.0 + 80.0 * sa;
            s.global_horizontal = s.direct_horizontal + s.diffuse_horizontal;
        }
        s.air_temperature = 15.0;
        s.wind_speed_10m = 4.0;
        out.push_back(s);
    }
    return out;
}

}  // namespace apv::fixture
