#include "apv/land_potential.hpp"

#include "apv/csv.hpp"
#include "apv/errors.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <spdlog/spdlog.h>
#include <stdexcept>

namespace apv {

bool IntRaster::same_grid(const IntRaster& o) const {
    return ncols == o.ncols && nrows == o.nrows && std::abs(cellsize - o.cellsize) < 1e-9 &&
           std::abs(xll - o.xll) < 1e-6 && std::abs(yll - o.yll) < 1e-6;
}

IntRaster parse_ascii_grid(std::string_view text) {
    IntRaster r;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    int header_seen = 0;
    std::streampos data_start = 0;
    while (header_seen < 6) {
        data_start = in.tellg();
        if (!std::getline(in, line)) {
            break;
        }
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        double value = 0.0;
        ls >> key;
        if (key.empty()) {
            continue;
        }
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
        if (!(ls >> value)) {
            if (header_seen < 5) {
                throw InputError(fmt::format("ASCII grid line {}: expected '<key> <value>' header", line_no));
            }
            in.seekg(data_start);
            --line_no;
            break;
        }
        if (key == "ncols") {
            r.ncols = static_cast<std::size_t>(value);
        } else if (key == "nrows") {
            r.nrows = static_cast<std::size_t>(value);
        } else if (key == "xllcorner" || key == "xllcenter") {
            r.xll = value;
        } else if (key == "yllcorner" || key == "yllcenter") {
            r.yll = value;
        } else if (key == "cellsize") {
            r.cellsize = value;
        } else if (key == "nodata_value") {
            r.nodata = static_cast<std::int32_t>(value);
        } else {
            if (header_seen < 5) {
                throw InputError(fmt::format("ASCII grid line {}: unknown header key '{}'", line_no, key));
            }
            in.seekg(data_start);
            --line_no;
            break;
        }
        ++header_seen;
    }
    if (r.ncols == 0 || r.nrows == 0 || !(r.cellsize > 0.0)) {
        throw InputError("ASCII grid header needs positive ncols, nrows and cellsize");
    }
    r.values.reserve(r.ncols * r.nrows);
    for (std::size_t row = 0; row < r.nrows; ++row) {
        if (!std::getline(in, line)) {
            throw InputError(fmt::format("ASCII grid: expected {} data rows, found {}", r.nrows, row));
        }
        ++line_no;
        std::istringstream ls(line);
        std::size_t count = 0;
        double v = 0.0;
        while (ls >> v) {
            r.values.push_back(static_cast<std::int32_t>(std::lround(v)));
            ++count;
        }
        if (count != r.ncols) {
            throw InputError(fmt::format("ASCII grid line {}: expected {} values, found {}", line_no, r.ncols, count));
        }
    }
    return r;
}

IntRaster read_ascii_grid(const std::string& path) { return parse_ascii_grid(read_text_file(path)); }

std::string format_ascii_grid(const IntRaster& r) {
    std::string out = fmt::format("ncols {}\nnrows {}\nxllcorner {}\nyllcorner {}\ncellsize {}\nNODATA_value {}\n",
                                  r.ncols, r.nrows, r.xll, r.yll, r.cellsize, r.nodata);
    for (std::size_t row = 0; row < r.nrows; ++row) {
        for (std::size_t col = 0; col < r.ncols; ++col) {
            if (col > 0) {
                out += ' ';
            }
            out += std::to_string(r.at(row, col));
        }
        out += '\n';
    }
    return out;
}

const std::set<std::int32_t>& corine_codes() {
    static const std::set<std::int32_t> codes{111, 112, 121, 122, 123, 124, 131, 132, 133, 141, 142,
                                              211, 212, 213, 221, 222, 223, 231, 241, 242, 243, 244,
                                              311, 312, 313, 321, 322, 323, 324, 331, 332, 333, 334, 335,
                                              411, 412, 421, 422, 423, 511, 512, 521, 522, 523};
    return codes;
}

ClassSets ClassSets::corine_defaults() {
    ClassSets s;
    // Arable land, fruit trees and berry plantations, pastures and
    // heterogeneous agricultural areas.
    s.include = {211, 212, 213, 222, 231, 241, 242, 243};
    // Built-up land and roads, forests, wetlands and water bodies.
    s.exclude = {111, 112, 121, 122, 123, 124, 131, 132, 133, 141, 142, 311, 312, 313,
                 411, 412, 421, 422, 423, 511, 512, 521, 522, 523};
    return s;
}

void ClassSets::validate() const {
    for (auto c : include) {
        if (exclude.count(c)) {
            throw std::invalid_argument(fmt::format("class {} is both included and excluded", c));
        }
    }
}

namespace {

std::set<std::int32_t> parse_code_list(const std::string& text, const std::string& key) {
    std::set<std::int32_t> out;
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
            out.insert(v);
        } catch (const std::exception&) {
            throw InputError(fmt::format("class-set '{}': '{}' is not an integer code", key, tok));
        }
    }
    return out;
}

}  // namespace

ClassSets read_class_sets(const std::string& path) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw InputError(fmt::format("class-set file {}: {}", path, e.what()));
    }
    ClassSets s;
    s.include = parse_code_list(tree.get<std::string>("classes.include", ""), "include");
    s.exclude = parse_code_list(tree.get<std::string>("classes.exclude", ""), "exclude");
    if (s.include.empty()) {
        throw InputError(fmt::format("class-set file {}: [classes] include list is empty", path));
    }
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(fmt::format("class-set file {}: {}", path, e.what()));
    }
    return s;
}

std::vector<std::uint8_t> eligibility_mask(const IntRaster& classes, const ClassSets& sets, double buffer_m) {
    sets.validate();
    if (!(buffer_m >= 0.0)) {
        throw std::invalid_argument("exclusion buffer must be >= 0");
    }
    const std::size_t n = classes.ncols * classes.nrows;
    std::vector<std::uint8_t> blocked(n, 0);
    std::vector<std::uint8_t> mask(n, 0);
    const auto& known = corine_codes();
    std::set<std::int32_t> unknown;

    for (std::size_t k = 0; k < n; ++k) {
        const auto code = classes.values[k];
        if (code == classes.nodata) {
            continue;
        }
        if (!known.count(code) && !sets.include.count(code) && !sets.exclude.count(code)) {
            unknown.insert(code);
            blocked[k] = 1;
        } else if (sets.exclude.count(code)) {
            blocked[k] = 1;
        }
    }
    for (auto code : unknown) {
        spdlog::warn("land-cover code {} is not a known class; treated as excluded", code);
    }

    // Offsets of pixel centres within the buffer radius.
    const double cells = buffer_m / classes.cellsize;
    const auto reach = static_cast<long>(std::floor(cells + 1e-9));
    std::vector<std::pair<long, long>> disc;
    for (long dr = -reach; dr <= reach; ++dr) {
        for (long dc = -reach; dc <= reach; ++dc) {
            if (static_cast<double>(dr * dr + dc * dc) <= cells * cells + 1e-9) {
                disc.emplace_back(dr, dc);
            }
        }
    }

    std::vector<std::uint8_t> near_excluded(n, 0);
    const auto rows = static_cast<long>(classes.nrows);
    const auto cols = static_cast<long>(classes.ncols);
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            if (!blocked[static_cast<std::size_t>(r * cols + c)]) {
                continue;
            }
            for (auto [dr, dc] : disc) {
                const long rr = r + dr;
                const long cc = c + dc;
                if (rr >= 0 && rr < rows && cc >= 0 && cc < cols) {
                    near_excluded[static_cast<std::size_t>(rr * cols + cc)] = 1;
                }
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        mask[k] = (sets.include.count(classes.values[k]) && !near_excluded[k]) ? 1 : 0;
    }
    return mask;
}

RegionPotential region_potential_from_area(std::int32_t region_id, double total_km2, double eligible_km2,
                                           double capacity_density_w_m2, const RegionYields& yields) {
    if (!(total_km2 > 0.0)) {
        throw std::invalid_argument(fmt::format("region {} has no area", region_id));
    }
    if (eligible_km2 > total_km2) {
        throw std::invalid_argument(fmt::format("region {}: eligible area exceeds total area", region_id));
    }
    RegionPotential p;
    p.region_id = region_id;
    p.total_km2 = total_km2;
    p.eligible_km2 = eligible_km2;
    p.share_pct = 100.0 * eligible_km2 / total_km2;
    // km² * 1e6 m²/km² * W/m² / 1e9 W/GW
    p.capacity_gw = eligible_km2 * capacity_density_w_m2 * 1e-3;
    // GW * kWh/kW = GWh; / 1000 -> TWh
    p.energy_twh = {p.capacity_gw * yields.tilt / 1000.0, p.capacity_gw * yields.vertical / 1000.0,
                    p.capacity_gw * yields.tracking / 1000.0};
    return p;
}

RegionPotential region_potential(std::int32_t region_id, std::size_t total_pixels, std::size_t eligible_pixels,
                                 double pixel_area_m2, double capacity_density_w_m2, const RegionYields& yields) {
    if (total_pixels == 0) {
        throw std::invalid_argument(fmt::format("region {} has zero pixels", region_id));
    }
    return region_potential_from_area(region_id, static_cast<double>(total_pixels) * pixel_area_m2 * 1e-6,
                                      static_cast<double>(eligible_pixels) * pixel_area_m2 * 1e-6,
                                      capacity_density_w_m2, yields);
}

std::vector<RegionPotential> region_potentials(const IntRaster& regions, std::span<const std::uint8_t> mask,
                                               const std::map<std::int32_t, RegionYields>& yields,
                                               double capacity_density_w_m2) {
    if (mask.size() != regions.values.size()) {
        throw std::invalid_argument("eligibility mask and region raster differ in size");
    }
    std::map<std::int32_t, std::pair<std::size_t, std::size_t>> counts;
    for (std::size_t k = 0; k < mask.size(); ++k) {
        const auto id = regions.values[k];
        if (id == regions.nodata) {
            continue;
        }
        auto& c = counts[id];
        ++c.first;
        c.second += mask[k] ? 1 : 0;
    }
    std::vector<RegionPotential> out;
    out.reserve(counts.size());
    for (const auto& [id, c] : counts) {
        const auto it = yields.find(id);
        if (it == yields.end()) {
            throw InputError(fmt::format("no specific yields supplied for region {}", id));
        }
        out.push_back(region_potential(id, c.first, c.second, regions.pixel_area_m2(), capacity_density_w_m2,
                                       it->second));
    }
    return out;
}

PotentialSummary aggregate_regions(std::span<const RegionPotential> regions, double demand_twh) {
    PotentialSummary s;
    s.demand_twh = demand_twh;
    std::set<std::int32_t> ids;
    for (const auto& r : regions) {
        if (!ids.insert(r.region_id).second) {
            throw std::invalid_argument(fmt::format("duplicate region id {}", r.region_id));
        }
        ++s.regions;
        s.total_km2 += r.total_km2;
        s.eligible_km2 += r.eligible_km2;
        s.capacity_gw += r.capacity_gw;
        for (std::size_t k = 0; k < 3; ++k) {
            s.energy_twh[k] += r.energy_twh[k];
        }
    }
    for (std::size_t k = 0; k < 3; ++k) {
        s.demand_multiple[k] = demand_twh > 0.0 ? s.energy_twh[k] / demand_twh : 0.0;
    }
    return s;
}

}  // namespace apv
