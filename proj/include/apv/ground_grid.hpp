#pragma once

#include "apv/geometry.hpp"
#include "apv/layout.hpp"
#include "apv/sky_irradiance.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace apv {

// Inclusive month range, e.g. {7, 7} for July or {4, 9} for April-September.
struct MonthPeriod {
    unsigned first = 1;
    unsigned last = 12;

    bool contains(unsigned month) const { return month >= first && month <= last; }
};

struct MapSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

// Regular grid of square cells over [0, width] x [0, length]; cell (i, j)
// has its centre at ((i + 0.5) c, (j + 0.5) c), stored row-major by j.
class GroundGrid {
public:
    GroundGrid(double width, double length, double cell_size);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t size() const { return nx_ * ny_; }
    double cell_size() const { return cell_; }
    double width() const { return width_; }
    double length() const { return length_; }
    Point2 center(std::size_t i, std::size_t j) const {
        return {(static_cast<double>(i) + 0.5) * cell_, (static_cast<double>(j) + 0.5) * cell_};
    }

    // Accumulators over the period, Wh/m².
    std::vector<double> blocked_direct;
    std::vector<double> blocked_circumsolar;
    double unshaded_total = 0.0;
    std::size_t daytime_hours = 0;

    double received(std::size_t cell) const {
        return unshaded_total - blocked_direct[cell] - blocked_circumsolar[cell];
    }
    // received / unshaded, in [0, 1]; 1 when nothing arrived at all.
    double normalized(std::size_t cell) const;
    std::vector<double> normalized_map() const;
    MapSummary summary() const;

    // Period mean of horizontal irradiance over daytime hours, W/m².
    double mean_daytime_irradiance(std::size_t cell) const;

private:
    double width_;
    double length_;
    double cell_;
    std::size_t nx_;
    std::size_t ny_;
};

// Marks (mask[cell] = 1) every cell whose centre lies in one of the convex
// ground shadows, for grid rows j in [row_begin, row_end).
void rasterize_shadows(const GroundGrid& grid, std::span<const Polygon2> shadows, std::size_t row_begin,
                       std::size_t row_end, std::vector<std::uint8_t>& mask);

// Per-cell blocked flag for one sun position: ray from the cell centre toward
// the sun hits a collector.
std::vector<std::uint8_t> ground_shadow_mask(const Layout& layout, const SolarPosition& sun, const GroundGrid& grid);

struct GroundMapOptions {
    double cell_size = 0.5;
    double albedo = kDefaultAlbedo;
    unsigned threads = 1;
};

// Accumulates blocked and unshaded horizontal irradiance for every hour of
// `samples` whose month lies in `period`. Only direct and circumsolar
// components are blocked. Throws InputError when the period is empty.
GroundGrid ground_irradiance_map(const Layout& layout, std::span<const IrradianceSample> samples,
                                 const GeoLocation& loc, MonthPeriod period, const GroundMapOptions& options = {});

// Dense CSV matrix, one grid row (constant y, south first) per line.
std::string ground_map_csv(const GroundGrid& grid);

// Binary 16-bit PGM (P5, maxval 65535, big-endian); value = round(norm * 65535).
// The first image row is the northern edge of the field.
std::string ground_map_pgm(const GroundGrid& grid);

}  // namespace apv
