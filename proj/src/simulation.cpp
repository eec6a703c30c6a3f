#include "apv/simulation.hpp"

#include "apv/errors.hpp"
#include "apv/parallel.hpp"
#include "apv/shading.hpp"

#include <chrono>
#include <fmt/format.h>

namespace apv {

double AnnualSimulation::energy_wh() const {
    double sum = 0.0;
    for (const auto& h : hours) {
        sum += h.power;
    }
    return sum;
}

double AnnualSimulation::energy_noshadow_wh() const {
    double sum = 0.0;
    for (const auto& h : hours) {
        sum += h.power_noshadow;
    }
    return sum;
}

std::vector<double> AnnualSimulation::energy_series_wh() const {
    std::vector<double> out;
    out.reserve(hours.size());
    for (const auto& h : hours) {
        out.push_back(h.power);
    }
    return out;
}

std::vector<double> AnnualSimulation::noshadow_series_wh() const {
    std::vector<double> out;
    out.reserve(hours.size());
    for (const auto& h : hours) {
        out.push_back(h.power_noshadow);
    }
    return out;
}

std::array<double, 12> AnnualSimulation::monthly_daily_specific_yield() const {
    std::array<double, 12> energy{};
    std::array<int, 12> year{};
    std::array<bool, 12> seen{};
    for (const auto& h : hours) {
        const auto c = civil_fields(h.time);
        energy[c.month - 1] += h.power;
        year[c.month - 1] = c.year;
        seen[c.month - 1] = true;
    }
    std::array<double, 12> out{};
    if (!(capacity_w > 0.0)) {
        return out;
    }
    for (unsigned m = 0; m < 12; ++m) {
        if (seen[m]) {
            out[m] = (energy[m] / capacity_w) / days_in_month(year[m], m + 1);
        }
    }
    return out;
}

void check_hourly_series(std::span<const IrradianceSample> samples, bool require_full_year) {
    using namespace std::chrono;
    if (samples.empty()) {
        throw InputError("weather series is empty");
    }
    std::vector<std::string> missing;
    std::size_t missing_count = 0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const auto step = samples[i].time - samples[i - 1].time;
        if (step <= seconds{0}) {
            throw InputError(fmt::format("weather timestamps not strictly increasing at row {} ({})", i + 1,
                                         format_utc(samples[i].time)));
        }
        if (step % hours{1} != seconds{0}) {
            throw InputError(fmt::format("weather step at row {} ({}) is not a whole number of hours", i + 1,
                                         format_utc(samples[i].time)));
        }
        for (auto t = samples[i - 1].time + hours{1}; t < samples[i].time; t += hours{1}) {
            ++missing_count;
            if (missing.size() < 50) {
                missing.push_back(format_utc(t));
            }
        }
    }
    if (missing_count > 0) {
        std::string list;
        for (const auto& m : missing) {
            list += (list.empty() ? "" : ", ") + m;
        }
        throw InputError(fmt::format("weather series has {} missing hour(s): {}{}", missing_count, list,
                                     missing_count > missing.size() ? ", ..." : ""));
    }
    if (require_full_year) {
        const auto c = civil_fields(samples.front().time);
        const std::size_t expected = is_leap_year(c.year) ? 8784 : 8760;
        if (c.month != 1 || c.day != 1 || c.hour != 0 || samples.size() != expected) {
            throw InputError(fmt::format("weather series must cover one full calendar year from Jan 1 00:00 "
                                         "({} hourly rows); got {} rows starting {}",
                                         expected, samples.size(), format_utc(samples.front().time)));
        }
    }
}

AnnualSimulation simulate_year(const Layout& layout, std::span<const IrradianceSample> samples,
                               const GeoLocation& loc, const PanelModel& panel, const SimulationOptions& options) {
    loc.validate();
    panel.validate();
    check_hourly_series(samples, options.require_full_year);

    AnnualSimulation result;
    result.hours.resize(samples.size());
    const double row_stc = panel.stc_power(layout.collector_area());
    result.capacity_w = row_stc * static_cast<double>(layout.row_count());
    const auto rows = layout.row_count();
    const double phi = layout.bifaciality();

    parallel_for(samples.size(), options.threads, [&](std::size_t h) {
        const IrradianceSample& s = samples[h];
        HourlyOutput& out = result.hours[h];
        out.time = s.time;
        out.cell_temperature = s.air_temperature;
        if (rows == 0 || (s.global_horizontal <= 0.0 && s.diffuse_horizontal <= 0.0 && s.direct_horizontal <= 0.0)) {
            return;
        }
        const UtcTime mid = s.time + std::chrono::minutes{30};
        const SolarPosition sun = solar_position(loc, mid);
        const auto c = civil_fields(mid);
        const double toa = extraterrestrial_horizontal(sun, c.day_of_year, is_leap_year(c.year) ? 366 : 365);
        const SkyParams sky = sky_params(s, sun, toa, options.albedo);

        const PlaneOrientation front = layout.front_orientation(sun);
        FaceInput front_in{transpose(s, sun, front, sky), 0.0, incidence_angle(sun, front)};
        std::vector<ShadingState> front_states(rows);
        if (front_in.irradiance.beam_like() > 0.0) {
            front_states = row_shading(layout, sun, front, front, panel.total_blocks);
        }

        std::optional<FaceInput> rear_in;
        std::vector<ShadingState> rear_states(rows);
        if (layout.has_rear()) {
            const PlaneOrientation rear = layout.rear_orientation(front);
            rear_in = FaceInput{transpose(s, sun, rear, sky), 0.0, incidence_angle(sun, rear)};
            if (rear_in->irradiance.beam_like() > 0.0) {
                rear_states = row_shading(layout, sun, front, rear, panel.total_blocks);
            }
        }

        const double wind = wind_at_module(s.wind_speed_10m, layout.mid_height(front), panel.wind_shear_exponent,
                                           panel.wind_reference_height);

        const CollectorPower clear = collector_power(front_in, rear_in, phi, panel, row_stc, s.air_temperature, wind);
        out.power_noshadow = clear.power * static_cast<double>(rows);

        double t_sum = 0.0, eta_sum = 0.0, g_sum = 0.0, fes_f = 0.0, fes_r = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            FaceInput f = front_in;
            f.effective_shading = front_states[r].effective;
            std::optional<FaceInput> b = rear_in;
            if (b) {
                b->effective_shading = rear_states[r].effective;
            }
            const CollectorPower p = collector_power(f, b, phi, panel, row_stc, s.air_temperature, wind);
            out.power += p.power;
            t_sum += p.cell_temperature;
            eta_sum += p.relative_efficiency;
            g_sum += p.effective_irradiance;
            fes_f += front_states[r].effective;
            fes_r += rear_states[r].effective;
        }
        const double n = static_cast<double>(rows);
        out.cell_temperature = t_sum / n;
        out.relative_efficiency = eta_sum / n;
        out.effective_irradiance = g_sum / n;
        out.front_effective_shading = fes_f / n;
        out.rear_effective_shading = fes_r / n;
    });
    return result;
}

}  // namespace apv
