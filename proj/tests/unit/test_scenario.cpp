#include "apv/csv.hpp"
#include "apv/errors.hpp"
#include "apv/scenario.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <gtest/gtest.h>

using namespace apv;

namespace {

Scenario small_grid() {
    Scenario s = parse_scenario("schema_version = 1\nname = small\n"
                                "[layout]\nspacings = 3, 4.5, 6, 7.5, 9, 12\nheights = 1, 2, 3\n"
                                "field_width = 24\nfield_length = 24\n"
                                "[ground]\nfield_width = 12\nfield_length = 12\ncell_size = 1\n"
                                "[output]\nthreads = 4\n");
    return s;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST(Scenario, SweepRunsAllFiftyFourCases) {
    const auto s = small_grid();
    const auto r = run_sweep(s, fixture::foulum_year(), fixture::dk1_prices());
    ASSERT_EQ(r.cases.size(), 54u);
    EXPECT_EQ(r.decision.size(), 54u);
    std::size_t maps = 0;
    for (const auto& c : r.cases) {
        maps += c.period_map ? 1 : 0;
        EXPECT_TRUE(c.season_map);
        EXPECT_GT(c.report.specific_yield, 0.0);
        EXPECT_FALSE(std::isnan(c.report.price_weighted_yield));
    }
    EXPECT_EQ(maps, 3u);  // one per kind at s = 6, h = 2
    EXPECT_EQ(r.cases[0].id, "tilt_s3_h1");
    EXPECT_EQ(r.cases[53].id, "tracking_s12_h3");
    const auto table = indicators_csv(r);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 55);  // header + 54 rows
}

TEST(Scenario, CsvHeaders) {
    Scenario s = small_grid();
    s.spacings = {6};
    s.heights = {2};
    const auto r = run_sweep(s, fixture::foulum_year(), fixture::dk1_prices());
    EXPECT_EQ(first_line(indicators_csv(r)),
              "scenario,kind,spacing_m,height_m,clearance_m,tilt_deg,rows,capacity_W,capacity_density_W_m2,"
              "electricity_yield_kWh_m2,price_weighted_yield_kWh_m2,shadow_losses_pct,specific_yield_kWh_kW");
    EXPECT_EQ(first_line(hourly_csv(r.cases[0], r.prices)),
              "time,P_W,P_noshadow_W,T_cell_C,eta_rel,F_ES_front,F_ES_rear,G_eff_Wm2,price");
    EXPECT_NE(first_line(monthly_csv(r)).find("dec_kWh_kW_day"), std::string::npos);
    EXPECT_NE(first_line(decision_map_csv(r.decision)).find("frac_high"), std::string::npos);
    const auto lines = split_lines(hourly_csv(r.cases[0], r.prices));
    EXPECT_EQ(lines.size(), 8761u);
}

TEST(Scenario, SelectYear) {
    WeatherTable t;
    t.samples = fixture::foulum_year();
    EXPECT_EQ(select_year(t, std::nullopt).size(), 8760u);
    EXPECT_THROW(select_year(t, 2016), InputError);
    t.samples.pop_back();
    EXPECT_THROW(select_year(t, std::nullopt), InputError);
}

TEST(Scenario, CaseErrorsCarryTheId) {
    Scenario s = small_grid();
    s.kinds = {MountKind::tracking};
    s.spacings = {3};
    s.heights = {1, 4};
    try {
        run_sweep(s, fixture::foulum_year(), {});
        FAIL();
    } catch (const std::exception& e) {
        EXPECT_NE(std::string(e.what()).find("tracking_s3_h4"), std::string::npos) << e.what();
    }
}

TEST(Scenario, ArtifactsAreWritten) {
    Scenario s = small_grid();
    s.spacings = {6};
    s.heights = {2};
    const auto r = run_sweep(s, fixture::foulum_year(), fixture::dk1_prices());
    const auto dir = std::filesystem::temp_directory_path() / "apv_scenario_artifacts";
    std::filesystem::remove_all(dir);
    const auto paths = write_artifacts(r, dir.string(), ArtifactSet::full);
    for (const auto& p : paths) {
        EXPECT_TRUE(std::filesystem::exists(p)) << p;
    }
    for (const char* name : {"indicators.csv", "hourly/vertical_s6_h2.csv", "monthly.csv", "ground/tilt_s6_h2.pgm",
                             "ground/tracking_s6_h2.csv", "decision_map.csv", "normalized_specific_yield.csv",
                             "price_weighted.csv"}) {
        EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
    }
    std::filesystem::remove_all(dir);
}

TEST(Scenario, RegionYieldsCsv) {
    const auto y = parse_region_yields("region,tilt,vertical,tracking\n1,850,800,1000\n2,900,850,1050\n");
    EXPECT_EQ(y.size(), 2u);
    EXPECT_EQ(y.at(2).tracking, 1050.0);
    EXPECT_THROW(parse_region_yields("id,a\n1,2\n"), InputError);
}

// Full-size reference field: vertical bifacial specific yield near 850 kWh/kW.
TEST(Scenario, VerticalReferenceYield) {
    Scenario s = parse_scenario("schema_version = 1\nname = ref\n[layout]\nkinds = vertical\nspacings = 6\n"
                                "heights = 2\n[output]\nthreads = 4\n");
    SweepOptions opt;
    opt.period_maps = false;
    opt.season_maps = false;
    const auto r = run_sweep(s, fixture::foulum_year(), fixture::dk1_prices(), opt);
    ASSERT_EQ(r.cases.size(), 1u);
    EXPECT_NEAR(r.cases[0].report.specific_yield, 850.0, 85.0);
}
