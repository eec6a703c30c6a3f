// Writes the synthetic weather and price years used by the test suite.
//
// Weather: hourly Foulum (56.49 N, 9.57 E) series for 2015 in UTC. Daily
// clearness follows a three-state (clear / broken / overcast) Markov chain
// tuned to monthly means typical of central Jutland, hourly clearness adds
// AR(1) noise, the diffuse split uses the Erbs correlation and beam is
// capped at clear-sky direct normal irradiance.
//
// Prices: hourly DK1-like spot prices for 2015 in fixed UTC+1 market time,
// built from monthly levels, a weekday/weekend intraday profile with morning
// and evening peaks and a midday dip, and day-to-day wind-driven variation.
//
// Usage: make_fixtures <output-dir>

#include "apv/csv.hpp"
#include "apv/solar_geometry.hpp"
#include "apv/time.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fmt/format.h>
#include <random>
#include <string>

namespace {

constexpr int kYear = 2015;
const apv::GeoLocation kFoulum{56.49, 9.57};

// Monthly mean daily clearness index.
constexpr std::array<double, 12> kMonthlyKt{0.30, 0.36, 0.40, 0.46, 0.50, 0.50,
                                            0.49, 0.47, 0.43, 0.37, 0.30, 0.27};
// Typical monthly global horizontal irradiation, kWh/m².
constexpr std::array<double, 12> kMonthlyGhi{15.6, 32.0, 70.8, 117.0, 158.0, 163.0,
                                             160.0, 126.0, 82.0, 44.6, 18.4, 10.4};
// Typical monthly diffuse share of global irradiation.
constexpr std::array<double, 12> kMonthlyKd{0.70, 0.62, 0.52, 0.45, 0.46, 0.47,
                                            0.48, 0.49, 0.50, 0.56, 0.67, 0.73};
constexpr int kCandidates = 40;
constexpr std::array<double, 12> kMonthlyTemp{0.5, 0.4, 2.6, 6.4, 10.9, 14.0, 16.3, 16.2, 12.9, 9.0, 4.8, 2.0};

// Monthly average price level, EUR/MWh.
constexpr std::array<double, 12> kMonthlyPrice{24.5, 26.0, 25.5, 24.5, 21.0, 20.5,
                                               15.5, 20.0, 22.0, 28.5, 22.5, 18.0};
// Weekday intraday shape by local hour, scaled to mean 1 below.
constexpr std::array<double, 24> kWeekdayShape{0.82, 0.77, 0.74, 0.73, 0.75, 0.84, 1.00, 1.12,
                                               1.16, 1.12, 1.07, 1.03, 0.99, 0.96, 0.95, 0.98,
                                               1.05, 1.16, 1.18, 1.13, 1.06, 1.00, 0.95, 0.88};

double erbs_diffuse_fraction(double kt) {
    if (kt <= 0.22) {
        return 1.0 - 0.09 * kt;
    }
    if (kt <= 0.80) {
        return 0.9511 - 0.1604 * kt + 4.388 * kt * kt - 16.638 * std::pow(kt, 3) + 12.336 * std::pow(kt, 4);
    }
    return 0.165;
}

// Meinel clear-sky direct normal irradiance with Kasten-Young air mass.
double clear_sky_dni(double altitude) {
    const double alt_deg = apv::rad2deg(altitude);
    const double am = 1.0 / (std::sin(altitude) + 0.50572 * std::pow(alt_deg + 6.07995, -1.6364));
    return apv::kSolarConstant * std::pow(0.7, std::pow(am, 0.678));
}

enum class Sky { clear, broken, overcast };

struct SkyLevel {
    double kt;
    double noise;
};

SkyLevel level(Sky s) {
    switch (s) {
    case Sky::clear:
        return {0.68, 0.04};
    case Sky::broken:
        return {0.42, 0.12};
    default:
        return {0.15, 0.05};
    }
}

std::string local_label(apv::UtcTime utc, int offset_hours) {
    const auto c = apv::civil_fields(utc + std::chrono::hours{offset_hours});
    return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:00", c.year, c.month, c.day, c.hour);
}

struct WeatherState {
    Sky sky = Sky::broken;
    double noise = 0.0;
    double temp_anomaly = 0.0;
};

struct MonthDraft {
    std::string rows;
    double ghi_kwh = 0.0;
    double dhi_kwh = 0.0;
    WeatherState end;
};

MonthDraft draft_month(std::mt19937_64& rng, unsigned month, WeatherState st) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::weibull_distribution<double> wind_day(2.0, 5.6);

    MonthDraft m;
    const double target = kMonthlyKt[month - 1];
    // Broken skies fixed at 40 %; the clear share meets the monthly mean.
    const double p_broken = 0.40;
    const double p_clear = std::clamp((target - p_broken * 0.42 - (1.0 - p_broken) * 0.15) / 0.53, 0.0, 0.6);
    const auto first = apv::make_utc(kYear, month, 1);
    for (unsigned d = 0; d < apv::days_in_month(kYear, month); ++d) {
        // Persistence: keep yesterday's sky with probability 0.35.
        if (uni(rng) > 0.35) {
            const double u = uni(rng);
            st.sky = u < p_clear ? Sky::clear : (u < p_clear + p_broken ? Sky::broken : Sky::overcast);
        }
        const auto lv = level(st.sky);
        const double wind_mean = wind_day(rng);
        st.temp_anomaly = 0.7 * st.temp_anomaly + 1.5 * gauss(rng);
        const double diurnal = 2.0 + 5.0 * (lv.kt - 0.15);

        for (int h = 0; h < 24; ++h) {
            const auto t = first + std::chrono::hours{24 * static_cast<int>(d) + h};
            const auto mid = t + std::chrono::minutes{30};
            const auto sun = apv::solar_position(kFoulum, mid);
            st.noise = 0.7 * st.noise + std::sqrt(1.0 - 0.49) * gauss(rng);

            double bhi = 0.0;
            double dhi = 0.0;
            if (sun.altitude > 0.0) {
                const double g_ext = apv::extraterrestrial_horizontal(kFoulum, mid);
                const double sin_alt = std::sin(sun.altitude);
                // Longer air mass lowers clearness near the horizon.
                const double airmass = 1.0 - 0.30 * std::exp(-sin_alt / 0.12);
                const double kt = std::clamp((lv.kt + lv.noise * st.noise) * airmass, 0.02, 0.80);
                const double ghi = kt * g_ext;
                dhi = std::round(10.0 * ghi * erbs_diffuse_fraction(kt)) / 10.0;
                // Beam never exceeds the clear-sky direct normal at this air mass.
                const double beam_cap = clear_sky_dni(sun.altitude) * sin_alt;
                bhi = std::max(std::round(10.0 * std::min(ghi - dhi, beam_cap)) / 10.0, 0.0);
            }
            const double solar_hour = std::fmod(h + 0.5 + kFoulum.longitude_deg / 15.0 + 24.0, 24.0);
            const double temp = kMonthlyTemp[month - 1] + st.temp_anomaly +
                                0.5 * diurnal * std::cos(2.0 * apv::kPi * (solar_hour - 14.5) / 24.0);
            const double wind = std::max(
                0.0, wind_mean * (1.0 + 0.15 * std::cos(2.0 * apv::kPi * (solar_hour - 14.0) / 24.0)) +
                         0.6 * gauss(rng));
            m.ghi_kwh += (bhi + dhi) / 1000.0;
            m.dhi_kwh += dhi / 1000.0;
            m.rows += fmt::format("{},{:.1f},{:.1f},{:.1f},{:.1f},{:.1f}\n", apv::format_utc(t), bhi, dhi,
                                  bhi + dhi, temp, wind);
        }
    }
    m.end = st;
    return m;
}

// Each month is the candidate closest to the typical monthly global
// irradiation and diffuse share, as in typical-meteorological-year selection.
std::string make_weather(std::mt19937_64& rng) {
    std::string out = "time,bhi,dhi,ghi,temp_air,wind10\n";
    WeatherState st;
    for (unsigned month = 1; month <= 12; ++month) {
        MonthDraft best;
        double best_err = 1e300;
        for (int k = 0; k < kCandidates; ++k) {
            auto draft = draft_month(rng, month, st);
            const double err = std::abs(draft.ghi_kwh / kMonthlyGhi[month - 1] - 1.0) +
                               std::abs(draft.dhi_kwh / draft.ghi_kwh - kMonthlyKd[month - 1]);
            if (err < best_err) {
                best_err = err;
                best = std::move(draft);
            }
        }
        out += best.rows;
        st = best.end;
    }
    return out;
}

std::string make_prices(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double shape_mean = 0.0;
    for (double v : kWeekdayShape) {
        shape_mean += v / 24.0;
    }
    std::string out = "time,price\n";
    const int offset = 1;  // market time UTC+1
    // Rows cover the UTC year; the market day follows local time.
    const auto start = apv::make_utc(kYear, 1, 1);
    const std::size_t hours = apv::is_leap_year(kYear) ? 8784 : 8760;
    double wind_factor = 0.0;
    double day_level = 0.0;
    bool weekend = false;
    int current_day = -1;
    for (std::size_t k = 0; k < hours; ++k) {
        const auto utc = start + std::chrono::hours{static_cast<long>(k)};
        const auto local = apv::civil_fields(utc + std::chrono::hours{offset});
        if (local.day_of_year != current_day) {
            current_day = local.day_of_year;
            // 2015-01-01 was a Thursday.
            const int weekday = (local.year == kYear ? current_day - 1 + 3 : 365 + 3) % 7;  // 0 = Monday
            weekend = weekday >= 5;
            wind_factor = 0.6 * wind_factor + 0.8 * 0.2 * gauss(rng);
            day_level = kMonthlyPrice[local.month - 1] * std::exp(wind_factor) * (weekend ? 0.88 : 1.04);
        }
        double shape = kWeekdayShape[static_cast<std::size_t>(local.hour)] / shape_mean;
        if (weekend) {
            shape = 1.0 + 0.6 * (shape - 1.0);
        }
        const double price = day_level * shape + 1.0 * gauss(rng);
        out += fmt::format("{},{:.2f}\n", local_label(utc, offset), price);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: make_fixtures <output-dir>\n");
        return 2;
    }
    const std::filesystem::path dir(argv[1]);
    std::mt19937_64 weather_rng(20150101);
    std::mt19937_64 price_rng(20150102);
    apv::write_text_file((dir / "foulum_2015_weather.csv").string(), make_weather(weather_rng));
    apv::write_text_file((dir / "dk1_2015_prices.csv").string(), make_prices(price_rng));
    return 0;
}
