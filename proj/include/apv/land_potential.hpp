#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apv {

// Single-band integer raster in ESRI ASCII-grid layout: row 0 is the
// northern edge, (xll, yll) the lower-left corner of the grid.
struct IntRaster {
    std::size_t ncols = 0;
    std::size_t nrows = 0;
    double xll = 0.0;
    double yll = 0.0;
    double cellsize = 100.0;  // m
    std::int32_t nodata = -9999;
    std::vector<std::int32_t> values;  // row-major, nrows * ncols

    std::int32_t at(std::size_t row, std::size_t col) const { return values[row * ncols + col]; }
    std::int32_t& at(std::size_t row, std::size_t col) { return values[row * ncols + col]; }
    double pixel_area_m2() const { return cellsize * cellsize; }
    bool same_grid(const IntRaster& other) const;
};

// Throws InputError with a line number on malformed input.
IntRaster parse_ascii_grid(std::string_view text);
IntRaster read_ascii_grid(const std::string& path);
std::string format_ascii_grid(const IntRaster& raster);

// Land-cover classes that qualify for installations and classes that
// disqualify their surroundings.
struct ClassSets {
    std::set<std::int32_t> include;
    std::set<std::int32_t> exclude;

    // Agricultural classes (arable, fruit trees, pastures, heterogeneous
    // agricultural) included; built-up, forest, wetland and water excluded.
    static ClassSets corine_defaults();
    // Throws std::invalid_argument when the sets overlap.
    void validate() const;
};

// INI-style file with a [classes] section holding comma/space separated
// `include` and `exclude` lists.
ClassSets read_class_sets(const std::string& path);

// The 44 level-3 Corine Land Cover codes.
const std::set<std::int32_t>& corine_codes();

inline constexpr double kDefaultBufferM = 100.0;

// 1 where the class is included and no excluded pixel centre lies within
// buffer_m (Euclidean, centre to centre). Codes outside the Corine list are
// reported once and handled as excluded; nodata is neither.
std::vector<std::uint8_t> eligibility_mask(const IntRaster& classes, const ClassSets& sets,
                                           double buffer_m = kDefaultBufferM);

// Annual specific yield per mount kind at a region's reference point, kWh/kW.
struct RegionYields {
    double tilt = 0.0;
    double vertical = 0.0;
    double tracking = 0.0;
};

struct RegionPotential {
    std::int32_t region_id = 0;
    double total_km2 = 0.0;
    double eligible_km2 = 0.0;
    double share_pct = 0.0;
    double capacity_gw = 0.0;
    std::array<double, 3> energy_twh{};  // tilt, vertical, tracking
};

inline constexpr double kDefaultCapacityDensity = 30.0;  // W/m²

// Areas from pixel counts; capacity = eligible area x density; energy =
// capacity x specific yield. Throws std::invalid_argument for zero pixels.
RegionPotential region_potential(std::int32_t region_id, std::size_t total_pixels, std::size_t eligible_pixels,
                                 double pixel_area_m2, double capacity_density_w_m2, const RegionYields& yields);

// Same from areas given directly in km².
RegionPotential region_potential_from_area(std::int32_t region_id, double total_km2, double eligible_km2,
                                           double capacity_density_w_m2, const RegionYields& yields);

// Every region id present in `regions` (nodata skipped) must have yields.
std::vector<RegionPotential> region_potentials(const IntRaster& regions, std::span<const std::uint8_t> mask,
                                               const std::map<std::int32_t, RegionYields>& yields,
                                               double capacity_density_w_m2 = kDefaultCapacityDensity);

// Current EU electricity demand used for the "times demand" ratio, TWh/yr.
inline constexpr double kReferenceDemandTwh = 2550.0;

struct PotentialSummary {
    std::size_t regions = 0;
    double total_km2 = 0.0;
    double eligible_km2 = 0.0;
    double capacity_gw = 0.0;
    std::array<double, 3> energy_twh{};
    std::array<double, 3> demand_multiple{};
    double demand_twh = kReferenceDemandTwh;
};

// Throws std::invalid_argument on duplicate region ids.
PotentialSummary aggregate_regions(std::span<const RegionPotential> regions, double demand_twh = kReferenceDemandTwh);

}  // namespace apv
