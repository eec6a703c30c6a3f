#include "apv/csv.hpp"

#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <gtest/gtest.h>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("apv_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(APVSIM_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string small_config(const fs::path& dir, const std::string& extra = "") {
    const auto path = dir / "run.ini";
    apv::write_text_file(path.string(),
                         "schema_version = 1\nname = cli\n[layout]\nkinds = tilt\nspacings = 6\nheights = 2\n"
                         "field_width = 24\nfield_length = 24\n"
                         "[ground]\nfield_width = 12\nfield_length = 12\ncell_size = 1\n"
                         "[inputs]\nweather = " +
                             apv::fixture::path("foulum_2015_weather.csv") +
                             "\nprices = " + apv::fixture::path("dk1_2015_prices.csv") +
                             "\nprice_utc_offset_hours = 1\n"
                             "[output]\ndirectory = " +
                             (dir / "out").string() + "\n" + extra);
    return path.string();
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run(""), 2);
    EXPECT_EQ(run("simulate"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help"), 0); }

TEST(Cli, MissingConfigExitsTwo) { EXPECT_EQ(run("validate --config /no/such.ini"), 2); }

TEST(Cli, ValidateAndSimulate) {
    const auto dir = scratch("ok");
    const auto cfg = small_config(dir);
    EXPECT_EQ(run("validate --config " + cfg), 0);
    EXPECT_EQ(run("simulate --config " + cfg + " --threads 2"), 0);
    EXPECT_TRUE(fs::exists(dir / "out" / "indicators.csv"));
    EXPECT_TRUE(fs::exists(dir / "out" / "hourly" / "tilt_s6_h2.csv"));
    EXPECT_EQ(run("decision-map --config " + cfg + " --out " + (dir / "dm").string()), 0);
    EXPECT_TRUE(fs::exists(dir / "dm" / "decision_map.csv"));
    fs::remove_all(dir);
}

TEST(Cli, GappyWeatherExitsTwo) {
    const auto dir = scratch("gap");
    auto text = apv::read_text_file(apv::fixture::path("foulum_2015_weather.csv"));
    const auto pos = text.find("2015-03-01T05:00Z");
    ASSERT_NE(pos, std::string::npos);
    text.erase(pos, text.find('\n', pos) - pos + 1);
    apv::write_text_file((dir / "w.csv").string(), text);
    const auto cfg = small_config(dir);
    EXPECT_EQ(run("simulate --config " + cfg + " --weather " + (dir / "w.csv").string()), 2);
    fs::remove_all(dir);
}

TEST(Cli, UnmatchedPricesExitTwo) {
    const auto dir = scratch("price");
    const auto cfg = small_config(dir);
    // Wrong offset leaves the last UTC hour without a price.
    apv::write_text_file((dir / "p.csv").string(), "time,price\n2015-01-01T00:00,1\n");
    EXPECT_EQ(run("simulate --config " + cfg + " --prices " + (dir / "p.csv").string()), 2);
    fs::remove_all(dir);
}

TEST(Cli, OverlappingRowsExitTwo) {
    const auto dir = scratch("overlap");
    const auto path = dir / "bad.ini";
    apv::write_text_file(path.string(), "schema_version = 1\n[layout]\nkinds = tracking\nspacings = 3\nheights = 4\n");
    EXPECT_EQ(run("validate --config " + path.string()), 2);
    fs::remove_all(dir);
}

TEST(Cli, PotentialRun) {
    const auto dir = scratch("potential");
    apv::write_text_file((dir / "classes.asc").string(),
                         "ncols 4\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 100\nNODATA_value -9999\n"
                         "211 211 211 512\n211 211 231 231\n");
    apv::write_text_file((dir / "regions.asc").string(),
                         "ncols 4\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 100\nNODATA_value -9999\n"
                         "1 1 2 2\n1 1 2 2\n");
    apv::write_text_file((dir / "yields.csv").string(), "region,tilt,vertical,tracking\n1,850,800,1000\n2,900,850,1050\n");
    apv::write_text_file((dir / "pot.ini").string(),
                         "schema_version = 1\n[potential]\nclasses = classes.asc\nregions = regions.asc\n"
                         "region_yields = yields.csv\n[output]\ndirectory = out\n");
    EXPECT_EQ(run("potential --config " + (dir / "pot.ini").string() + " --out " + (dir / "out").string()), 0);
    const auto csv = apv::read_text_file((dir / "out" / "region_potential.csv").string());
    EXPECT_NE(csv.find("\n1,"), std::string::npos);
    fs::remove_all(dir);
}
