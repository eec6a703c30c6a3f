#include "apv/agronomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace apv {

double CropThresholds::of(CropDemand d) const {
    switch (d) {
    case CropDemand::low:
        return low;
    case CropDemand::medium:
        return medium;
    case CropDemand::high:
        return high;
    }
    return high;
}

void CropThresholds::validate() const {
    if (!(low >= 0.0 && low < medium && medium < high)) {
        throw std::invalid_argument("crop thresholds must satisfy 0 <= low < medium < high");
    }
}

double par_flux(double broadband_irradiance) { return broadband_irradiance * kParShare * kParPhotonsPerJoule; }

double crop_fraction(const GroundGrid& grid, double threshold) {
    if (grid.size() == 0) {
        throw std::invalid_argument("crop_fraction on an empty ground map");
    }
    std::size_t ok = 0;
    for (std::size_t c = 0; c < grid.size(); ++c) {
        if (par_flux(grid.mean_daytime_irradiance(c)) >= threshold) {
            ++ok;
        }
    }
    return static_cast<double>(ok) / static_cast<double>(grid.size());
}

std::vector<DecisionPoint> decision_map(std::span<const ScenarioOutcome> outcomes, const CropThresholds& thresholds) {
    thresholds.validate();
    std::vector<DecisionPoint> points;
    points.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        if (o.growing_season_map == nullptr) {
            throw std::invalid_argument("scenario " + o.scenario + " has no ground map");
        }
        DecisionPoint p;
        p.scenario = o.scenario;
        p.kind = o.kind;
        p.spacing = o.spacing;
        p.height = o.height;
        p.capacity_density = o.capacity_density;
        p.electricity_yield = o.electricity_yield;
        p.crop_fraction = {crop_fraction(*o.growing_season_map, thresholds.low),
                           crop_fraction(*o.growing_season_map, thresholds.medium),
                           crop_fraction(*o.growing_season_map, thresholds.high)};
        points.push_back(std::move(p));
    }
    std::sort(points.begin(), points.end(), [](const DecisionPoint& a, const DecisionPoint& b) {
        if (a.electricity_yield != b.electricity_yield) {
            return a.electricity_yield < b.electricity_yield;
        }
        return a.scenario < b.scenario;
    });
    return points;
}

}  // namespace apv
