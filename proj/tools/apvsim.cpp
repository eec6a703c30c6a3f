// apvsim: field-level agrivoltaic simulation, decision maps and regional
// land potential.

#include "apv/config.hpp"
#include "apv/errors.hpp"
#include "apv/parallel.hpp"
#include "apv/scenario.hpp"
#include "apv/weather_io.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <spdlog/spdlog.h>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

struct CommonFlags {
    std::string config;
    std::string weather;
    std::string prices;
    std::string out;
    unsigned threads = 0;
    double wind_shear_exponent = -1.0;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required) {
    auto* opt = cmd->add_option("--config", f.config, "Scenario INI file");
    if (config_required) {
        opt->required();
    }
    cmd->add_option("--weather", f.weather, "Hourly weather CSV (overrides [inputs] weather)");
    cmd->add_option("--prices", f.prices, "Hourly price CSV (overrides [inputs] prices)");
    cmd->add_option("--out", f.out, "Output directory (overrides [output] directory)");
    cmd->add_option("--threads", f.threads, "Worker threads (default: config or hardware)");
    cmd->add_option("--wind-shear-exponent", f.wind_shear_exponent, "Wind profile exponent for module height");
}

apv::Scenario load(const CommonFlags& f) {
    apv::Scenario s = f.config.empty() ? apv::Scenario{} : apv::load_scenario(f.config);
    if (!f.weather.empty()) {
        s.weather_path = f.weather;
    }
    if (!f.prices.empty()) {
        s.prices_path = f.prices;
    }
    if (!f.out.empty()) {
        s.output_dir = f.out;
    }
    if (f.threads > 0) {
        s.threads = f.threads;
    }
    if (f.wind_shear_exponent >= 0.0) {
        s.panel.wind_shear_exponent = f.wind_shear_exponent;
    }
    s.validate();
    return s;
}

void report(const std::vector<std::string>& paths) {
    for (const auto& p : paths) {
        std::printf("%s\n", p.c_str());
    }
}

int validate_inputs(const CommonFlags& f) {
    const auto s = load(f);
    if (!s.weather_path.empty()) {
        const auto w = apv::ingest_weather(s.weather_path);
        const auto year = apv::select_year(w, s.year);
        spdlog::info("weather {}: {} rows, {} repaired, simulated year has {} hours", s.weather_path,
                     w.samples.size(), w.repaired_rows, year.size());
        if (!s.prices_path.empty()) {
            std::vector<apv::UtcTime> times;
            for (const auto& x : year) {
                times.push_back(x.time);
            }
            const auto p = apv::align_prices(apv::ingest_prices(s.prices_path, s.price_utc_offset_hours), times);
            spdlog::info("prices {}: aligned, mean {:.3f}", s.prices_path, p.mean());
        }
    }
    for (auto kind : s.kinds) {
        for (double sp : s.spacings) {
            for (double h : s.heights) {
                (void)apv::build_layout(s.layout_config(kind, sp, h), s.location.latitude_deg);
            }
        }
    }
    if (s.potential) {
        const auto& p = *s.potential;
        const auto classes = apv::read_ascii_grid(p.classes_path);
        const auto regions = apv::read_ascii_grid(p.regions_path);
        if (!classes.same_grid(regions)) {
            throw apv::InputError("class and region rasters do not share the same grid");
        }
        if (!p.class_sets_path.empty()) {
            (void)apv::read_class_sets(p.class_sets_path);
        }
    }
    std::printf("inputs valid\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agrivoltaic field simulation and land potential"};
    app.require_subcommand(1);

    CommonFlags sim_flags, map_flags, pot_flags, val_flags;
    auto* simulate = app.add_subcommand("simulate", "Simulate every configured layout and write all tables and maps");
    add_common(simulate, sim_flags, true);
    auto* decision = app.add_subcommand("decision-map", "Crop-light versus electricity trade-off table");
    add_common(decision, map_flags, true);
    auto* potential = app.add_subcommand("potential", "Eligible land and regional capacity/energy potential");
    add_common(potential, pot_flags, true);
    auto* validate = app.add_subcommand("validate", "Check configuration and input files without simulating");
    add_common(validate, val_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (simulate->parsed()) {
            const auto s = load(sim_flags);
            report(apv::write_artifacts(apv::run_scenario(s), s.output_dir, apv::ArtifactSet::full));
        } else if (decision->parsed()) {
            const auto s = load(map_flags);
            apv::SweepOptions opt;
            opt.period_maps = false;
            report(apv::write_artifacts(apv::run_scenario(s, opt), s.output_dir, apv::ArtifactSet::decision_map));
        } else if (potential->parsed()) {
            const auto s = load(pot_flags);
            if (!s.potential) {
                throw apv::InputError("config has no [potential] section");
            }
            const auto r = apv::run_potential(*s.potential);
            spdlog::info("eligible {:.1f} km2, {:.1f} GW", r.summary.eligible_km2, r.summary.capacity_gw);
            report(apv::write_potential(r, s.output_dir));
        } else {
            return validate_inputs(val_flags);
        }
    } catch (const apv::InputError& e) {
        spdlog::error("{}", e.what());
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        spdlog::error("{}", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kExitComputation;
    }
    return 0;
}
