#pragma once

#include "apv/agronomy.hpp"
#include "apv/ground_grid.hpp"
#include "apv/layout.hpp"
#include "apv/pv_electrical.hpp"
#include "apv/solar_geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apv {

inline constexpr int kSchemaVersion = 1;

// Inputs of the land-potential run.
struct PotentialConfig {
    std::string classes_path;       // ESRI ASCII grid of land-cover codes
    std::string regions_path;       // ESRI ASCII grid of region ids, same grid
    std::string class_sets_path;    // optional; default agricultural class sets
    std::string region_yields_path; // CSV region,tilt,vertical,tracking (kWh/kW)
    double buffer_m = 100.0;
    double capacity_density = 30.0;  // W/m²
    double demand_twh = 2550.0;
};

// A field-level study: every combination of kinds x spacings x heights.
struct Scenario {
    int schema_version = kSchemaVersion;
    std::string name = "scenario";
    GeoLocation location{56.49, 9.57};

    std::vector<MountKind> kinds{MountKind::tilt, MountKind::vertical, MountKind::tracking};
    std::vector<double> spacings{6.0};
    std::vector<double> heights{2.0};
    std::array<std::optional<double>, 3> clearance{};    // per kind, indexed by MountKind
    std::array<std::optional<double>, 3> bifaciality{};  // per kind
    std::optional<double> tilt_deg;
    double max_tracker_rotation_deg = 90.0;
    double field_width = 100.0;
    double field_length = 100.0;

    PanelModel panel;
    double albedo = 0.2;

    // Ground study on a smaller field.
    double ground_width = 50.0;
    double ground_length = 50.0;
    double ground_cell_size = 0.5;
    MonthPeriod map_period{7, 7};
    MonthPeriod growing_season{4, 9};
    // Ground maps are written for scenarios at this (s, h); all when unset.
    std::optional<double> map_spacing = 6.0;
    std::optional<double> map_height = 2.0;

    CropThresholds thresholds;

    std::string weather_path;
    std::string prices_path;  // optional
    double price_utc_offset_hours = 0.0;
    std::optional<int> year;  // calendar year taken from the weather file; first complete year by default

    std::string output_dir = "out";
    unsigned threads = 1;

    std::optional<PotentialConfig> potential;

    LayoutConfig layout_config(MountKind kind, double spacing, double height) const;
    // Throws InputError when lists are empty or values are out of range.
    void validate() const;
};

// Parses the INI text; relative paths resolve against base_dir.
Scenario parse_scenario(std::string_view text, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);

// "tilt_s4.5_h2"
std::string scenario_id(MountKind kind, double spacing, double height);

}  // namespace apv
