#pragma once

#include "apv/agronomy.hpp"
#include "apv/config.hpp"
#include "apv/ground_grid.hpp"
#include "apv/indicators.hpp"
#include "apv/land_potential.hpp"
#include "apv/simulation.hpp"
#include "apv/weather_io.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apv {

// One (kind, s, h) combination of a sweep.
struct CaseResult {
    std::string id;
    MountKind kind = MountKind::tilt;
    double spacing = 0.0;
    double height = 0.0;
    double clearance = 0.0;
    double tilt_deg = 0.0;
    std::size_t rows = 0;
    AnnualSimulation simulation;
    IndicatorReport report;
    std::optional<GroundGrid> period_map;  // map_period, only for selected cases
    std::optional<GroundGrid> season_map;  // growing season, for the decision map
};

struct SweepResult {
    std::string name;
    GeoLocation location;
    std::vector<CaseResult> cases;  // kinds x spacings x heights, in config order
    std::vector<double> prices;     // aligned with the hours; empty without a price file
    MonthPeriod map_period;
    MonthPeriod growing_season;
    std::vector<DecisionPoint> decision;
};

struct SweepOptions {
    bool period_maps = true;
    bool season_maps = true;
};

// Rows of one calendar year; the first complete year when `year` is unset.
// Throws InputError when no complete year is available.
std::vector<IrradianceSample> select_year(const WeatherTable& table, std::optional<int> year);

// Runs every case on already loaded inputs. `prices` must be aligned with
// `samples` or empty. Errors carry the case id.
SweepResult run_sweep(const Scenario& scenario, std::span<const IrradianceSample> samples,
                      std::span<const double> prices, const SweepOptions& options = {});

// Loads weather and prices named by the scenario, then runs the sweep.
SweepResult run_scenario(const Scenario& scenario, const SweepOptions& options = {});

std::string indicators_csv(const SweepResult& result);
std::string hourly_csv(const CaseResult& c, std::span<const double> prices);
std::string monthly_csv(const SweepResult& result);
std::string ground_summary_csv(const SweepResult& result);
std::string decision_map_csv(std::span<const DecisionPoint> points);
std::string normalized_specific_yield_csv(const SweepResult& result);
std::string price_weighted_csv(const SweepResult& result);

enum class ArtifactSet { full, decision_map };

// Writes the CSV/PGM artifacts under `dir`; returns the written paths in order.
std::vector<std::string> write_artifacts(const SweepResult& result, const std::string& dir, ArtifactSet which);

// CSV with header region,tilt,vertical,tracking (kWh/kW).
std::map<std::int32_t, RegionYields> parse_region_yields(std::string_view text, std::string_view source = "yields");

struct PotentialResult {
    IntRaster eligibility;  // 1 eligible, 0 not, nodata copied from the class raster
    std::vector<RegionPotential> regions;
    PotentialSummary summary;
};

PotentialResult run_potential(const PotentialConfig& config);
std::string region_potential_csv(std::span<const RegionPotential> regions);
std::string potential_summary_csv(const PotentialSummary& summary);
std::vector<std::string> write_potential(const PotentialResult& result, const std::string& dir);

}  // namespace apv
