#include "apv/ground_grid.hpp"

#include "apv/errors.hpp"
#include "apv/parallel.hpp"
#include "apv/shading.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace apv {

GroundGrid::GroundGrid(double width, double length, double cell_size)
    : width_(width), length_(length), cell_(cell_size) {
    if (!(cell_size > 0.0) || !(width > 0.0) || !(length > 0.0)) {
        throw std::invalid_argument("ground grid needs positive width, length and cell size");
    }
    nx_ = static_cast<std::size_t>(std::ceil(width / cell_size - 1e-9));
    ny_ = static_cast<std::size_t>(std::ceil(length / cell_size - 1e-9));
    blocked_direct.assign(size(), 0.0);
    blocked_circumsolar.assign(size(), 0.0);
}

double GroundGrid::normalized(std::size_t cell) const {
    if (!(unshaded_total > 0.0)) {
        return 1.0;
    }
    return std::clamp(received(cell) / unshaded_total, 0.0, 1.0);
}

std::vector<double> GroundGrid::normalized_map() const {
    std::vector<double> out(size());
    for (std::size_t c = 0; c < size(); ++c) {
        out[c] = normalized(c);
    }
    return out;
}

MapSummary GroundGrid::summary() const {
    MapSummary s{1.0, 0.0, 0.0};
    if (size() == 0) {
        return s;
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < size(); ++c) {
        const double v = normalized(c);
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mean = sum / static_cast<double>(size());
    return s;
}

double GroundGrid::mean_daytime_irradiance(std::size_t cell) const {
    if (daytime_hours == 0) {
        return 0.0;
    }
    return received(cell) / static_cast<double>(daytime_hours);
}

void rasterize_shadows(const GroundGrid& grid, std::span<const Polygon2> shadows, std::size_t row_begin,
                       std::size_t row_end, std::vector<std::uint8_t>& mask) {
    const double c = grid.cell_size();
    const auto nx = static_cast<long>(grid.nx());
    for (const Polygon2& poly : shadows) {
        double ymin = poly.front().y;
        double ymax = ymin;
        for (const auto& p : poly) {
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
        const long j0 = std::max(static_cast<long>(row_begin), static_cast<long>(std::ceil(ymin / c - 0.5)));
        const long j1 = std::min(static_cast<long>(row_end) - 1, static_cast<long>(std::floor(ymax / c - 0.5)));
        for (long j = j0; j <= j1; ++j) {
            const double yc = (static_cast<double>(j) + 0.5) * c;
            const auto span = convex_span_at(poly, yc);
            if (!span) {
                continue;
            }
            const long i0 = std::max(0L, static_cast<long>(std::ceil(span->first / c - 0.5)));
            const long i1 = std::min(nx - 1, static_cast<long>(std::floor(span->second / c - 0.5)));
            for (long i = i0; i <= i1; ++i) {
                mask[static_cast<std::size_t>(j) * grid.nx() + static_cast<std::size_t>(i)] = 1;
            }
        }
    }
}

std::vector<std::uint8_t> ground_shadow_mask(const Layout& layout, const SolarPosition& sun, const GroundGrid& grid) {
    std::vector<std::uint8_t> mask(grid.size(), 0);
    if (sun.altitude <= 0.0) {
        return mask;
    }
    const auto rects = layout.collectors(layout.front_orientation(sun));
    const auto shadows = ground_shadows(rects, sun_vector(sun));
    rasterize_shadows(grid, shadows, 0, grid.ny(), mask);
    return mask;
}

namespace {

struct GroundHour {
    double beam_direct = 0.0;       // horizontal B that rows can block
    double beam_circumsolar = 0.0;  // horizontal D_circ that rows can block
    double total = 0.0;             // unshaded horizontal total
    std::vector<Polygon2> shadows;
};

}  // namespace

GroundGrid ground_irradiance_map(const Layout& layout, std::span<const IrradianceSample> samples,
                                 const GeoLocation& loc, MonthPeriod period, const GroundMapOptions& options) {
    GroundGrid grid(layout.field_width(), layout.field_length(), options.cell_size);
    const PlaneOrientation horizontal{0.0, 0.0};

    std::vector<std::size_t> selected;
    for (std::size_t h = 0; h < samples.size(); ++h) {
        if (period.contains(civil_fields(samples[h].time).month)) {
            selected.push_back(h);
        }
    }
    if (selected.empty()) {
        throw InputError(fmt::format("ground map period months {}-{} has no weather samples", period.first,
                                     period.last));
    }

    std::vector<GroundHour> hours(selected.size());
    std::vector<std::uint8_t> daytime(selected.size(), 0);
    parallel_for(selected.size(), options.threads, [&](std::size_t k) {
        const IrradianceSample& s = samples[selected[k]];
        const UtcTime mid = s.time + std::chrono::minutes{30};
        const SolarPosition sun = solar_position(loc, mid);
        if (sun.altitude <= 0.0) {
            return;
        }
        daytime[k] = 1;
        const auto c = civil_fields(mid);
        const double toa = extraterrestrial_horizontal(sun, c.day_of_year, is_leap_year(c.year) ? 366 : 365);
        const SkyParams sky = sky_params(s, sun, toa, options.albedo);
        const PlaneIrradiance g = transpose(s, sun, horizontal, sky);
        GroundHour& gh = hours[k];
        gh.beam_direct = g.direct;
        gh.beam_circumsolar = g.circumsolar;
        gh.total = g.global;
        if (g.beam_like() > 0.0 && layout.row_count() > 0) {
            gh.shadows = ground_shadows(layout.collectors(layout.front_orientation(sun)), sun_vector(sun));
        }
    });

    for (std::size_t k = 0; k < hours.size(); ++k) {
        if (daytime[k]) {
            grid.unshaded_total += hours[k].total;
            ++grid.daytime_hours;
        }
    }

    // Cell sums run over hours in order inside each band of grid rows, so the
    // result does not depend on how bands are spread over threads.
    const std::size_t bands = std::min<std::size_t>(grid.ny(), 16);
    const std::size_t rows_per_band = (grid.ny() + bands - 1) / bands;
    parallel_for(bands, options.threads, [&](std::size_t b) {
        const std::size_t j0 = b * rows_per_band;
        const std::size_t j1 = std::min(grid.ny(), j0 + rows_per_band);
        if (j0 >= j1) {
            return;
        }
        std::vector<std::uint8_t> mask(grid.size(), 0);
        for (const GroundHour& gh : hours) {
            if (gh.shadows.empty()) {
                continue;
            }
            std::fill(mask.begin() + static_cast<long>(j0 * grid.nx()), mask.begin() + static_cast<long>(j1 * grid.nx()),
                      0);
            rasterize_shadows(grid, gh.shadows, j0, j1, mask);
            for (std::size_t cell = j0 * grid.nx(); cell < j1 * grid.nx(); ++cell) {
                if (mask[cell]) {
                    grid.blocked_direct[cell] += gh.beam_direct;
                    grid.blocked_circumsolar[cell] += gh.beam_circumsolar;
                }
            }
        }
    });
    return grid;
}

std::string ground_map_csv(const GroundGrid& grid) {
    std::string out;
    out.reserve(grid.size() * 9);
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += fmt::format("{:.6f}", grid.normalized(j * grid.nx() + i));
        }
        out += '\n';
    }
    return out;
}

std::string ground_map_pgm(const GroundGrid& grid) {
    std::string out = fmt::format("P5\n{} {}\n65535\n", grid.nx(), grid.ny());
    out.reserve(out.size() + grid.size() * 2);
    for (std::size_t jj = grid.ny(); jj-- > 0;) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const auto v = static_cast<unsigned>(std::lround(grid.normalized(jj * grid.nx() + i) * 65535.0));
            out += static_cast<char>((v >> 8) & 0xff);
            out += static_cast<char>(v & 0xff);
        }
    }
    return out;
}

}  // namespace apv
