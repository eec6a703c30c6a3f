#include "apv/weather_io.hpp"

#include "apv/csv.hpp"
#include "apv/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace apv {

namespace {

constexpr std::chrono::hours kHour{1};

// Header position of each required column; throws naming the missing ones.
template <std::size_t N>
std::array<std::size_t, N> locate_columns(std::string_view header, const std::array<std::string_view, N>& names,
                                          std::string_view source) {
    const auto fields = split_fields(header);
    std::array<std::size_t, N> idx{};
    std::string missing;
    for (std::size_t k = 0; k < N; ++k) {
        const auto it = std::find(fields.begin(), fields.end(), names[k]);
        if (it == fields.end()) {
            missing += missing.empty() ? "" : ", ";
            missing += names[k];
        } else {
            idx[k] = static_cast<std::size_t>(it - fields.begin());
        }
    }
    if (!missing.empty()) {
        throw InputError(fmt::format("{}: missing column(s) {}", source, missing));
    }
    return idx;
}

std::string_view field_at(const std::vector<std::string_view>& fields, std::size_t k, std::size_t line,
                          std::string_view source) {
    if (k >= fields.size()) {
        throw InputError(fmt::format("{} line {}: expected at least {} fields, found {}", source, line, k + 1,
                                     fields.size()));
    }
    return fields[k];
}

double number_at(const std::vector<std::string_view>& fields, std::size_t k, std::size_t line,
                 std::string_view source, std::string_view column) {
    const auto f = field_at(fields, k, line, source);
    try {
        const double v = parse_double(f);
        if (!std::isfinite(v)) {
            throw std::invalid_argument("not finite");
        }
        return v;
    } catch (const std::invalid_argument&) {
        throw InputError(fmt::format("{} line {}: column {} value '{}' is not a number", source, line, column, f));
    }
}

UtcTime time_at(const std::vector<std::string_view>& fields, std::size_t k, std::size_t line,
                std::string_view source) {
    const auto f = field_at(fields, k, line, source);
    try {
        return parse_utc(f);
    } catch (const InputError& e) {
        throw InputError(fmt::format("{} line {}: {}", source, line, e.what()));
    }
}

}  // namespace

std::vector<UtcTime> WeatherTable::times() const {
    std::vector<UtcTime> out;
    out.reserve(samples.size());
    for (const auto& s : samples) {
        out.push_back(s.time);
    }
    return out;
}

WeatherTable parse_weather(std::string_view text, std::string_view source) {
    const auto lines = split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && trim(lines[first]).empty()) {
        ++first;
    }
    if (first == lines.size()) {
        throw InputError(fmt::format("{}: file is empty", source));
    }
    static constexpr std::array<std::string_view, 6> kColumns{"time", "bhi", "dhi", "ghi", "temp_air", "wind10"};
    const auto col = locate_columns(lines[first], kColumns, source);

    WeatherTable table;
    std::vector<std::string> gaps;
    for (std::size_t n = first + 1; n < lines.size(); ++n) {
        if (trim(lines[n]).empty()) {
            continue;
        }
        const std::size_t line = n + 1;
        const auto fields = split_fields(lines[n]);
        IrradianceSample s;
        s.time = time_at(fields, col[0], line, source);
        s.direct_horizontal = number_at(fields, col[1], line, source, "bhi");
        s.diffuse_horizontal = number_at(fields, col[2], line, source, "dhi");
        s.global_horizontal = number_at(fields, col[3], line, source, "ghi");
        s.air_temperature = number_at(fields, col[4], line, source, "temp_air");
        s.wind_speed_10m = number_at(fields, col[5], line, source, "wind10");
        if (s.direct_horizontal < 0.0 || s.diffuse_horizontal < 0.0 || s.global_horizontal < 0.0) {
            throw InputError(fmt::format("{} line {}: negative irradiance", source, line));
        }
        if (s.wind_speed_10m < 0.0) {
            throw InputError(fmt::format("{} line {}: negative wind speed", source, line));
        }
        if (!table.samples.empty()) {
            const auto prev = table.samples.back().time;
            if (s.time <= prev) {
                throw InputError(fmt::format("{} line {}: timestamp {} does not follow {}", source, line,
                                             format_utc(s.time), format_utc(prev)));
            }
            if ((s.time - prev) % kHour != std::chrono::seconds{0}) {
                throw InputError(fmt::format("{} line {}: timestamp {} is not on the hourly step from {}", source,
                                             line, format_utc(s.time), format_utc(prev)));
            }
            for (auto t = prev + kHour; t < s.time; t += kHour) {
                gaps.push_back(format_utc(t));
            }
        }
        if (std::abs(s.global_horizontal - (s.direct_horizontal + s.diffuse_horizontal)) > kClosureTolerance) {
            spdlog::warn("{} line {}: ghi {} differs from bhi + dhi = {}; using bhi + dhi", source, line,
                         s.global_horizontal, s.direct_horizontal + s.diffuse_horizontal);
            s.global_horizontal = s.direct_horizontal + s.diffuse_horizontal;
            ++table.repaired_rows;
        }
        table.samples.push_back(s);
    }
    if (!gaps.empty()) {
        std::string listed;
        const std::size_t shown = std::min<std::size_t>(gaps.size(), 50);
        for (std::size_t k = 0; k < shown; ++k) {
            listed += (k ? ", " : "") + gaps[k];
        }
        throw InputError(fmt::format("{}: {} missing hour(s): {}{}", source, gaps.size(), listed,
                                     gaps.size() > shown ? ", ..." : ""));
    }
    if (table.samples.empty()) {
        throw InputError(fmt::format("{}: no data rows", source));
    }
    return table;
}

WeatherTable ingest_weather(const std::string& path) { return parse_weather(read_text_file(path), path); }

PriceSeries parse_prices(std::string_view text, double utc_offset_hours, std::string_view source) {
    if (!std::isfinite(utc_offset_hours) || std::abs(utc_offset_hours) > 14.0) {
        throw InputError(fmt::format("{}: UTC offset {} h is out of range", source, utc_offset_hours));
    }
    const auto lines = split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && trim(lines[first]).empty()) {
        ++first;
    }
    if (first == lines.size()) {
        throw InputError(fmt::format("{}: file is empty", source));
    }
    static constexpr std::array<std::string_view, 2> kColumns{"time", "price"};
    const auto col = locate_columns(lines[first], kColumns, source);
    const auto shift = std::chrono::seconds{std::lround(utc_offset_hours * 3600.0)};

    PriceSeries out;
    for (std::size_t n = first + 1; n < lines.size(); ++n) {
        if (trim(lines[n]).empty()) {
            continue;
        }
        const std::size_t line = n + 1;
        const auto fields = split_fields(lines[n]);
        const UtcTime t = time_at(fields, col[0], line, source) - shift;
        if (!out.times.empty() && t <= out.times.back()) {
            throw InputError(fmt::format("{} line {}: timestamps must increase", source, line));
        }
        out.times.push_back(t);
        out.prices.push_back(number_at(fields, col[1], line, source, "price"));
    }
    if (out.prices.empty()) {
        throw InputError(fmt::format("{}: no price rows", source));
    }
    return out;
}

PriceSeries ingest_prices(const std::string& path, double utc_offset_hours) {
    return parse_prices(read_text_file(path), utc_offset_hours, path);
}

PriceSeries align_prices(const PriceSeries& prices, std::span<const UtcTime> times) {
    PriceSeries out;
    out.times.reserve(times.size());
    out.prices.reserve(times.size());
    for (const auto t : times) {
        const auto it = std::lower_bound(prices.times.begin(), prices.times.end(), t);
        if (it == prices.times.end() || *it != t) {
            throw InputError(fmt::format("no price for {} (first unmatched production hour)", format_utc(t)));
        }
        out.times.push_back(t);
        out.prices.push_back(prices.prices[static_cast<std::size_t>(it - prices.times.begin())]);
    }
    return out;
}

}  // namespace apv
