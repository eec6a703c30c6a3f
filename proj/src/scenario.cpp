#include "apv/scenario.hpp"

#include "apv/csv.hpp"
#include "apv/errors.hpp"
#include "apv/parallel.hpp"

#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <set>
#include <spdlog/spdlog.h>

namespace apv {

namespace {

constexpr std::array<std::string_view, 12> kMonths{"jan", "feb", "mar", "apr", "may", "jun",
                                                   "jul", "aug", "sep", "oct", "nov", "dec"};

// Fixed-precision number, empty for NaN.
std::string num(double v, int precision) {
    if (std::isnan(v)) {
        return {};
    }
    if (v == 0.0) {
        v = 0.0;  // no "-0.000"
    }
    auto s = fmt::format("{:.{}f}", v, precision);
    if (s.find_first_not_of("-0.") == std::string::npos) {
        s = fmt::format("{:.{}f}", 0.0, precision);
    }
    return s;
}

bool selected_for_maps(const Scenario& s, double spacing, double height) {
    if (!s.map_spacing && !s.map_height) {
        return true;
    }
    const bool ok_s = !s.map_spacing || std::abs(*s.map_spacing - spacing) < 1e-9;
    const bool ok_h = !s.map_height || std::abs(*s.map_height - height) < 1e-9;
    return ok_s && ok_h;
}

struct CaseParams {
    MountKind kind;
    double spacing;
    double height;
};

}  // namespace

std::vector<IrradianceSample> select_year(const WeatherTable& table, std::optional<int> year) {
    std::map<int, std::pair<std::size_t, std::size_t>> ranges;  // year -> [first, last]
    for (std::size_t k = 0; k < table.samples.size(); ++k) {
        const int y = civil_fields(table.samples[k].time).year;
        auto [it, inserted] = ranges.try_emplace(y, k, k);
        if (!inserted) {
            it->second.second = k;
        }
    }
    for (const auto& [y, r] : ranges) {
        if (year && *year != y) {
            continue;
        }
        const std::size_t n = r.second - r.first + 1;
        const std::size_t expected = is_leap_year(y) ? 8784 : 8760;
        if (n == expected && table.samples[r.first].time == make_utc(y, 1, 1)) {
            return {table.samples.begin() + static_cast<std::ptrdiff_t>(r.first),
                    table.samples.begin() + static_cast<std::ptrdiff_t>(r.second + 1)};
        }
        if (year) {
            throw InputError(fmt::format("weather covers only {} of {} hours of year {}", n, expected, y));
        }
    }
    if (year) {
        throw InputError(fmt::format("weather contains no rows for year {}", *year));
    }
    throw InputError("weather does not contain a complete calendar year");
}

SweepResult run_sweep(const Scenario& scenario, std::span<const IrradianceSample> samples,
                      std::span<const double> prices, const SweepOptions& options) {
    scenario.validate();
    if (!prices.empty() && prices.size() != samples.size()) {
        throw InputError(fmt::format("{} prices for {} weather hours", prices.size(), samples.size()));
    }
    check_hourly_series(samples, true);

    std::vector<CaseParams> plans;
    for (auto kind : scenario.kinds) {
        for (double s : scenario.spacings) {
            for (double h : scenario.heights) {
                plans.push_back({kind, s, h});
            }
        }
    }

    SweepResult result;
    result.name = scenario.name;
    result.location = scenario.location;
    result.map_period = scenario.map_period;
    result.growing_season = scenario.growing_season;
    result.prices.assign(prices.begin(), prices.end());
    result.cases.resize(plans.size());

    const unsigned outer = plans.size() > 1 ? scenario.threads : 1;
    const unsigned inner = plans.size() > 1 ? 1 : scenario.threads;

    parallel_for(plans.size(), outer, [&](std::size_t i) {
        const auto& plan = plans[i];
        auto& c = result.cases[i];
        c.id = scenario_id(plan.kind, plan.spacing, plan.height);
        c.kind = plan.kind;
        c.spacing = plan.spacing;
        c.height = plan.height;
        try {
            const Layout field = build_layout(scenario.layout_config(plan.kind, plan.spacing, plan.height),
                                              scenario.location.latitude_deg);
            c.clearance = field.clearance();
            c.tilt_deg = rad2deg(field.tilt());
            c.rows = field.row_count();

            SimulationOptions sim;
            sim.albedo = scenario.albedo;
            sim.threads = inner;
            c.simulation = simulate_year(field, samples, scenario.location, scenario.panel, sim);
            const auto energy = c.simulation.energy_series_wh();
            const auto noshadow = c.simulation.noshadow_series_wh();
            c.report = make_report(energy, noshadow, prices, c.simulation.capacity_w, field.field_area());

            if (options.period_maps || options.season_maps) {
                auto ground_cfg = scenario.layout_config(plan.kind, plan.spacing, plan.height);
                ground_cfg.field_width = scenario.ground_width;
                ground_cfg.field_length = scenario.ground_length;
                const Layout ground = build_layout(ground_cfg, scenario.location.latitude_deg);
                GroundMapOptions gopt;
                gopt.cell_size = scenario.ground_cell_size;
                gopt.albedo = scenario.albedo;
                gopt.threads = inner;
                if (options.period_maps && selected_for_maps(scenario, plan.spacing, plan.height)) {
                    c.period_map = ground_irradiance_map(ground, samples, scenario.location, scenario.map_period, gopt);
                }
                if (options.season_maps) {
                    c.season_map =
                        ground_irradiance_map(ground, samples, scenario.location, scenario.growing_season, gopt);
                }
            }
        } catch (const InputError& e) {
            throw InputError(fmt::format("case {}: {}", c.id, e.what()));
        } catch (const std::invalid_argument& e) {
            throw InputError(fmt::format("case {}: {}", c.id, e.what()));
        } catch (const std::exception& e) {
            throw ComputationError(fmt::format("case {}: {}", c.id, e.what()));
        }
    });

    if (options.season_maps) {
        std::vector<ScenarioOutcome> outcomes;
        outcomes.reserve(result.cases.size());
        for (const auto& c : result.cases) {
            outcomes.push_back({c.id, c.kind, c.spacing, c.height, c.report.capacity_density,
                                c.report.electricity_yield, &*c.season_map});
        }
        result.decision = decision_map(outcomes, scenario.thresholds);
    }
    return result;
}

SweepResult run_scenario(const Scenario& scenario, const SweepOptions& options) {
    if (scenario.weather_path.empty()) {
        throw InputError("no weather file given ([inputs] weather or --weather)");
    }
    const auto weather = ingest_weather(scenario.weather_path);
    const auto samples = select_year(weather, scenario.year);
    std::vector<double> prices;
    if (!scenario.prices_path.empty()) {
        const auto raw = ingest_prices(scenario.prices_path, scenario.price_utc_offset_hours);
        std::vector<UtcTime> times;
        times.reserve(samples.size());
        for (const auto& s : samples) {
            times.push_back(s.time);
        }
        prices = align_prices(raw, times).prices;
    }
    return run_sweep(scenario, samples, prices, options);
}

std::string indicators_csv(const SweepResult& r) {
    std::string out =
        "scenario,kind,spacing_m,height_m,clearance_m,tilt_deg,rows,capacity_W,capacity_density_W_m2,"
        "electricity_yield_kWh_m2,price_weighted_yield_kWh_m2,shadow_losses_pct,specific_yield_kWh_kW\n";
    for (const auto& c : r.cases) {
        out += fmt::format("{},{},{:g},{:g},{:g},{},{},{},{},{},{},{},{}\n", c.id, to_string(c.kind), c.spacing,
                           c.height, c.clearance, num(c.tilt_deg, 3), c.rows, num(c.simulation.capacity_w, 3),
                           num(c.report.capacity_density, 6), num(c.report.electricity_yield, 6),
                           num(c.report.price_weighted_yield, 6), num(c.report.shadow_losses, 6),
                           num(c.report.specific_yield, 6));
    }
    return out;
}

std::string hourly_csv(const CaseResult& c, std::span<const double> prices) {
    std::string out = "time,P_W,P_noshadow_W,T_cell_C,eta_rel,F_ES_front,F_ES_rear,G_eff_Wm2";
    out += prices.empty() ? "\n" : ",price\n";
    const auto& hours = c.simulation.hours;
    out.reserve(hours.size() * 96);
    for (std::size_t k = 0; k < hours.size(); ++k) {
        const auto& h = hours[k];
        out += fmt::format("{},{},{},{},{},{},{},{}", format_utc(h.time), num(h.power, 3), num(h.power_noshadow, 3),
                           num(h.cell_temperature, 3), num(h.relative_efficiency, 6),
                           num(h.front_effective_shading, 6), num(h.rear_effective_shading, 6),
                           num(h.effective_irradiance, 3));
        if (!prices.empty()) {
            out += "," + num(prices[k], 4);
        }
        out += '\n';
    }
    return out;
}

std::string monthly_csv(const SweepResult& r) {
    std::string out = "scenario,kind,spacing_m,height_m";
    for (auto m : kMonths) {
        out += fmt::format(",{}_kWh_kW_day", m);
    }
    out += '\n';
    for (const auto& c : r.cases) {
        out += fmt::format("{},{},{:g},{:g}", c.id, to_string(c.kind), c.spacing, c.height);
        for (double v : c.simulation.monthly_daily_specific_yield()) {
            out += "," + num(v, 6);
        }
        out += '\n';
    }
    return out;
}

std::string ground_summary_csv(const SweepResult& r) {
    std::string out = "scenario,kind,spacing_m,height_m,months,min,max,mean\n";
    auto row = [&](const CaseResult& c, const GroundGrid& g, MonthPeriod p) {
        const auto s = g.summary();
        out += fmt::format("{},{},{:g},{:g},{}-{},{},{},{}\n", c.id, to_string(c.kind), c.spacing, c.height, p.first,
                           p.last, num(s.min, 6), num(s.max, 6), num(s.mean, 6));
    };
    for (const auto& c : r.cases) {
        if (c.period_map) {
            row(c, *c.period_map, r.map_period);
        }
    }
    for (const auto& c : r.cases) {
        if (c.season_map) {
            row(c, *c.season_map, r.growing_season);
        }
    }
    return out;
}

std::string decision_map_csv(std::span<const DecisionPoint> points) {
    std::string out =
        "scenario,kind,spacing_m,height_m,capacity_density_W_m2,electricity_yield_kWh_m2,frac_low,frac_medium,"
        "frac_high\n";
    for (const auto& p : points) {
        out += fmt::format("{},{},{:g},{:g},{},{},{},{},{}\n", p.scenario, to_string(p.kind), p.spacing, p.height,
                           num(p.capacity_density, 6), num(p.electricity_yield, 6), num(p.crop_fraction[0], 6),
                           num(p.crop_fraction[1], 6), num(p.crop_fraction[2], 6));
    }
    return out;
}

namespace {

const CaseResult* find_case(const SweepResult& r, MountKind kind, double spacing, double height) {
    for (const auto& c : r.cases) {
        if (c.kind == kind && c.spacing == spacing && c.height == height) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

std::string normalized_specific_yield_csv(const SweepResult& r) {
    std::string out = "location,scenario,kind,spacing_m,height_m,specific_yield_kWh_kW,normalized_to_tilt\n";
    const auto loc = fmt::format("{:.4f};{:.4f}", r.location.latitude_deg, r.location.longitude_deg);
    for (const auto& c : r.cases) {
        const auto* ref = find_case(r, MountKind::tilt, c.spacing, c.height);
        const double norm = ref && ref->report.specific_yield > 0.0
                                ? c.report.specific_yield / ref->report.specific_yield
                                : std::numeric_limits<double>::quiet_NaN();
        out += fmt::format("{},{},{},{:g},{:g},{},{}\n", loc, c.id, to_string(c.kind), c.spacing, c.height,
                           num(c.report.specific_yield, 6), num(norm, 6));
    }
    return out;
}

std::string price_weighted_csv(const SweepResult& r) {
    std::string out =
        "scenario,kind,spacing_m,height_m,electricity_yield_kWh_m2,price_weighted_yield_kWh_m2,weighting_ratio,"
        "best_unweighted,best_weighted\n";
    for (const auto& c : r.cases) {
        // Best among the kinds sharing this (s, h).
        bool best_plain = true;
        bool best_weighted = true;
        for (const auto& o : r.cases) {
            if (&o == &c || o.spacing != c.spacing || o.height != c.height) {
                continue;
            }
            best_plain = best_plain && c.report.electricity_yield >= o.report.electricity_yield;
            best_weighted = best_weighted && c.report.price_weighted_yield >= o.report.price_weighted_yield;
        }
        const double ratio = c.report.electricity_yield > 0.0
                                 ? c.report.price_weighted_yield / c.report.electricity_yield
                                 : std::numeric_limits<double>::quiet_NaN();
        const bool have_prices = !std::isnan(c.report.price_weighted_yield);
        out += fmt::format("{},{},{:g},{:g},{},{},{},{},{}\n", c.id, to_string(c.kind), c.spacing, c.height,
                           num(c.report.electricity_yield, 6), num(c.report.price_weighted_yield, 6), num(ratio, 6),
                           best_plain ? 1 : 0, have_prices ? (best_weighted ? "1" : "0") : "");
    }
    return out;
}

std::vector<std::string> write_artifacts(const SweepResult& r, const std::string& dir, ArtifactSet which) {
    const std::filesystem::path base(dir);
    std::vector<std::string> written;
    auto put = [&](const std::filesystem::path& rel, std::string_view content) {
        const auto p = (base / rel).string();
        write_text_file(p, content);
        written.push_back(p);
    };
    put("indicators.csv", indicators_csv(r));
    if (which == ArtifactSet::full) {
        for (const auto& c : r.cases) {
            put(std::filesystem::path("hourly") / (c.id + ".csv"), hourly_csv(c, r.prices));
        }
        put("monthly.csv", monthly_csv(r));
        for (const auto& c : r.cases) {
            if (c.period_map) {
                put(std::filesystem::path("ground") / (c.id + ".csv"), ground_map_csv(*c.period_map));
                put(std::filesystem::path("ground") / (c.id + ".pgm"), ground_map_pgm(*c.period_map));
            }
        }
        put(std::filesystem::path("ground") / "summary.csv", ground_summary_csv(r));
        put("normalized_specific_yield.csv", normalized_specific_yield_csv(r));
        put("price_weighted.csv", price_weighted_csv(r));
    }
    if (!r.decision.empty()) {
        put("decision_map.csv", decision_map_csv(r.decision));
    }
    return written;
}

std::map<std::int32_t, RegionYields> parse_region_yields(std::string_view text, std::string_view source) {
    const auto lines = split_lines(text);
    if (lines.empty() || trim(lines[0]).empty()) {
        throw InputError(fmt::format("{}: file is empty", source));
    }
    const auto header = split_fields(lines[0]);
    const std::vector<std::string_view> expected{"region", "tilt", "vertical", "tracking"};
    if (header != expected) {
        throw InputError(fmt::format("{}: header must be region,tilt,vertical,tracking", source));
    }
    std::map<std::int32_t, RegionYields> out;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        if (trim(lines[n]).empty()) {
            continue;
        }
        const auto f = split_fields(lines[n]);
        if (f.size() != 4) {
            throw InputError(fmt::format("{} line {}: expected 4 fields", source, n + 1));
        }
        try {
            const double id = parse_double(f[0]);
            if (id != std::floor(id)) {
                throw std::invalid_argument("region id");
            }
            RegionYields y{parse_double(f[1]), parse_double(f[2]), parse_double(f[3])};
            if (y.tilt < 0.0 || y.vertical < 0.0 || y.tracking < 0.0) {
                throw std::invalid_argument("negative yield");
            }
            if (!out.emplace(static_cast<std::int32_t>(id), y).second) {
                throw InputError(fmt::format("{} line {}: duplicate region {}", source, n + 1, f[0]));
            }
        } catch (const std::invalid_argument& e) {
            throw InputError(fmt::format("{} line {}: {}", source, n + 1, e.what()));
        }
    }
    return out;
}

PotentialResult run_potential(const PotentialConfig& config) {
    const auto classes = read_ascii_grid(config.classes_path);
    const auto regions = read_ascii_grid(config.regions_path);
    if (!classes.same_grid(regions)) {
        throw InputError("class and region rasters do not share the same grid");
    }
    if (std::abs(classes.cellsize - 100.0) > 1e-6) {
        spdlog::warn("raster pixel size is {} m, not the nominal 100 m", classes.cellsize);
    }
    const ClassSets sets =
        config.class_sets_path.empty() ? ClassSets::corine_defaults() : read_class_sets(config.class_sets_path);
    const auto yields = parse_region_yields(read_text_file(config.region_yields_path), config.region_yields_path);

    PotentialResult r;
    const auto mask = eligibility_mask(classes, sets, config.buffer_m);
    r.eligibility = classes;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        if (classes.values[k] != classes.nodata) {
            r.eligibility.values[k] = mask[k];
        }
    }
    r.regions = region_potentials(regions, mask, yields, config.capacity_density);
    r.summary = aggregate_regions(r.regions, config.demand_twh);
    return r;
}

std::string region_potential_csv(std::span<const RegionPotential> regions) {
    std::string out =
        "region,total_km2,eligible_km2,share_pct,capacity_GW,energy_tilt_TWh,energy_vertical_TWh,"
        "energy_tracking_TWh\n";
    for (const auto& p : regions) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", p.region_id, num(p.total_km2, 4), num(p.eligible_km2, 4),
                           num(p.share_pct, 4), num(p.capacity_gw, 4), num(p.energy_twh[0], 4),
                           num(p.energy_twh[1], 4), num(p.energy_twh[2], 4));
    }
    return out;
}

std::string potential_summary_csv(const PotentialSummary& s) {
    std::string out =
        "regions,total_km2,eligible_km2,capacity_GW,energy_tilt_TWh,energy_vertical_TWh,energy_tracking_TWh,"
        "demand_TWh,demand_multiple_tilt,demand_multiple_vertical,demand_multiple_tracking\n";
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", s.regions, num(s.total_km2, 4), num(s.eligible_km2, 4),
                       num(s.capacity_gw, 4), num(s.energy_twh[0], 4), num(s.energy_twh[1], 4),
                       num(s.energy_twh[2], 4), num(s.demand_twh, 1), num(s.demand_multiple[0], 4),
                       num(s.demand_multiple[1], 4), num(s.demand_multiple[2], 4));
    return out;
}

std::vector<std::string> write_potential(const PotentialResult& r, const std::string& dir) {
    const std::filesystem::path base(dir);
    std::vector<std::string> written;
    auto put = [&](const std::string& name, std::string_view content) {
        const auto p = (base / name).string();
        write_text_file(p, content);
        written.push_back(p);
    };
    put("eligibility.asc", format_ascii_grid(r.eligibility));
    put("region_potential.csv", region_potential_csv(r.regions));
    put("potential_summary.csv", potential_summary_csv(r.summary));
    return written;
}

}  // namespace apv
