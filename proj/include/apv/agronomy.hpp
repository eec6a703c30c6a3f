#pragma once

#include "apv/ground_grid.hpp"
#include "apv/layout.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace apv {

enum class CropDemand { low, medium, high };

// Share of broadband AM1.5G irradiance inside 400-700 nm (430 of 1000 W/m²)
// and the photon conversion for that band.
inline constexpr double kParShare = 0.43;
inline constexpr double kParPhotonsPerJoule = 4.56;  // µmol/J

// Saturation thresholds, µmol/m²s of period-mean daytime PAR.
struct CropThresholds {
    double low = 250.0;
    double medium = 450.0;
    double high = 650.0;

    double of(CropDemand d) const;
    // Throws std::invalid_argument unless 0 <= low < medium < high.
    void validate() const;
};

double par_flux(double broadband_irradiance);

// Fraction of cells whose period-mean daytime PAR reaches `threshold`.
// Throws std::invalid_argument for an empty grid.
double crop_fraction(const GroundGrid& grid, double threshold);

struct DecisionPoint {
    std::string scenario;
    MountKind kind = MountKind::tilt;
    double spacing = 0.0;
    double height = 0.0;
    double capacity_density = 0.0;   // W/m²
    double electricity_yield = 0.0;  // kWh/m²
    std::array<double, 3> crop_fraction{};  // low, medium, high
};

struct ScenarioOutcome {
    std::string scenario;
    MountKind kind = MountKind::tilt;
    double spacing = 0.0;
    double height = 0.0;
    double capacity_density = 0.0;
    double electricity_yield = 0.0;
    const GroundGrid* growing_season_map = nullptr;
};

// One point per scenario with all three crop fractions, sorted by
// electricity yield (ties broken by scenario id).
std::vector<DecisionPoint> decision_map(std::span<const ScenarioOutcome> outcomes, const CropThresholds& thresholds);

}  // namespace apv
