#include "apv/config.hpp"

#include "apv/csv.hpp"
#include "apv/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <map>
#include <set>
#include <sstream>

namespace apv {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"", {"schema_version", "name"}},
        {"location", {"latitude", "longitude"}},
        {"layout",
         {"kinds", "spacings", "heights", "clearance_tilt", "clearance_vertical", "clearance_tracking",
          "bifaciality_tilt", "bifaciality_vertical", "bifaciality_tracking", "tilt_deg",
          "max_tracker_rotation_deg", "field_width", "field_length"}},
        {"panel",
         {"stc_efficiency", "system_efficiency", "bypass_blocks", "angular_loss_coeff", "u0", "u1",
          "wind_shear_exponent", "wind_reference_height"}},
        {"sky", {"albedo"}},
        {"ground", {"field_width", "field_length", "cell_size", "map_months", "growing_season", "map_spacing",
                    "map_height"}},
        {"crops", {"low", "medium", "high"}},
        {"inputs", {"weather", "prices", "price_utc_offset_hours", "year"}},
        {"output", {"directory", "threads"}},
        {"potential",
         {"classes", "regions", "class_sets", "region_yields", "buffer_m", "capacity_density", "demand_twh"}},
    };
    return keys;
}

void check_schema(const pt::ptree& tree) {
    const auto& known = schema();
    for (const auto& [key, node] : tree) {
        if (node.empty()) {
            if (!known.at("").count(key)) {
                throw InputError(fmt::format("config: unknown top-level key '{}'", key));
            }
            continue;
        }
        const auto section = known.find(key);
        if (section == known.end() || key.empty()) {
            throw InputError(fmt::format("config: unknown section [{}]", key));
        }
        for (const auto& [sub, _] : node) {
            if (!section->second.count(sub)) {
                throw InputError(fmt::format("config: unknown key '{}' in [{}]", sub, key));
            }
        }
    }
}

std::optional<std::string> get_string(const pt::ptree& tree, const std::string& path) {
    const auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'));
    if (!v || trim(*v).empty()) {
        return std::nullopt;
    }
    return std::string(trim(*v));
}

std::optional<double> get_double(const pt::ptree& tree, const std::string& path) {
    const auto s = get_string(tree, path);
    if (!s) {
        return std::nullopt;
    }
    try {
        return parse_double(*s);
    } catch (const std::invalid_argument&) {
        throw InputError(fmt::format("config: {} = '{}' is not a number", path, *s));
    }
}

void read_into(const pt::ptree& tree, const std::string& path, double& target) {
    if (const auto v = get_double(tree, path)) {
        target = *v;
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::string cleaned = text;
    for (auto& c : cleaned) {
        if (c == ',') {
            c = ' ';
        }
    }
    std::istringstream in(cleaned);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::vector<double> get_double_list(const pt::ptree& tree, const std::string& path) {
    std::vector<double> out;
    if (const auto s = get_string(tree, path)) {
        for (const auto& tok : split_list(*s)) {
            try {
                out.push_back(parse_double(tok));
            } catch (const std::invalid_argument&) {
                throw InputError(fmt::format("config: {} entry '{}' is not a number", path, tok));
            }
        }
    }
    return out;
}

MonthPeriod parse_period(const std::string& text, const std::string& key) {
    const auto dash = text.find('-');
    try {
        MonthPeriod p;
        if (dash == std::string::npos) {
            p.first = p.last = static_cast<unsigned>(std::stoul(text));
        } else {
            p.first = static_cast<unsigned>(std::stoul(text.substr(0, dash)));
            p.last = static_cast<unsigned>(std::stoul(text.substr(dash + 1)));
        }
        if (p.first < 1 || p.last > 12 || p.first > p.last) {
            throw std::out_of_range(text);
        }
        return p;
    } catch (const std::exception&) {
        throw InputError(fmt::format("config: {} = '{}' must be a month or month range like 4-9", key, text));
    }
}

std::string resolve(const std::string& base_dir, const std::string& p) {
    const std::filesystem::path path(p);
    if (path.is_absolute()) {
        return p;
    }
    return (std::filesystem::path(base_dir) / path).lexically_normal().string();
}

std::size_t index_of(MountKind k) { return static_cast<std::size_t>(k); }

}  // namespace

std::string scenario_id(MountKind kind, double spacing, double height) {
    return fmt::format("{}_s{:g}_h{:g}", to_string(kind), spacing, height);
}

LayoutConfig Scenario::layout_config(MountKind kind, double spacing, double height) const {
    LayoutConfig c;
    c.kind = kind;
    c.spacing = spacing;
    c.height = height;
    c.clearance = clearance[index_of(kind)];
    c.bifaciality = bifaciality[index_of(kind)];
    c.field_width = field_width;
    c.field_length = field_length;
    c.tilt_deg = tilt_deg;
    c.max_tracker_rotation_deg = max_tracker_rotation_deg;
    return c;
}

void Scenario::validate() const {
    if (schema_version != kSchemaVersion) {
        throw InputError(fmt::format("config: schema_version {} is not supported (expected {})", schema_version,
                                     kSchemaVersion));
    }
    try {
        location.validate();
        panel.validate();
        thresholds.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(fmt::format("config: {}", e.what()));
    }
    if (kinds.empty() || spacings.empty() || heights.empty()) {
        throw InputError("config: kinds, spacings and heights must each list at least one value");
    }
    for (double s : spacings) {
        if (!(s > 0.0)) {
            throw InputError(fmt::format("config: spacing {} must be > 0", s));
        }
    }
    for (double h : heights) {
        if (!(h > 0.0)) {
            throw InputError(fmt::format("config: height {} must be > 0", h));
        }
    }
    if (!(field_width > 0.0 && field_length > 0.0 && ground_width > 0.0 && ground_length > 0.0)) {
        throw InputError("config: field dimensions must be > 0");
    }
    if (!(ground_cell_size > 0.0)) {
        throw InputError("config: ground cell_size must be > 0");
    }
    if (!(albedo >= 0.0 && albedo <= 1.0)) {
        throw InputError("config: albedo must lie in [0, 1]");
    }
    for (const auto& p : {weather_path, prices_path}) {
        if (!p.empty() && !std::filesystem::exists(p)) {
            throw InputError(fmt::format("config: input file {} does not exist", p));
        }
    }
    if (potential) {
        for (const auto& p : {potential->classes_path, potential->regions_path, potential->region_yields_path}) {
            if (p.empty()) {
                throw InputError("config: [potential] needs classes, regions and region_yields");
            }
            if (!std::filesystem::exists(p)) {
                throw InputError(fmt::format("config: input file {} does not exist", p));
            }
        }
        if (!potential->class_sets_path.empty() && !std::filesystem::exists(potential->class_sets_path)) {
            throw InputError(fmt::format("config: input file {} does not exist", potential->class_sets_path));
        }
    }
}

Scenario parse_scenario(std::string_view text, const std::string& base_dir) {
    pt::ptree tree;
    try {
        std::istringstream in{std::string(text)};
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw InputError(fmt::format("config: {}", e.what()));
    }
    check_schema(tree);

    Scenario s;
    const auto version = get_string(tree, "schema_version");
    if (!version) {
        throw InputError("config: schema_version is required");
    }
    try {
        s.schema_version = std::stoi(*version);
    } catch (const std::exception&) {
        throw InputError(fmt::format("config: schema_version '{}' is not an integer", *version));
    }
    if (const auto n = get_string(tree, "name")) {
        s.name = *n;
    }

    read_into(tree, "location.latitude", s.location.latitude_deg);
    read_into(tree, "location.longitude", s.location.longitude_deg);

    if (const auto kinds = get_string(tree, "layout.kinds")) {
        s.kinds.clear();
        for (const auto& k : split_list(*kinds)) {
            s.kinds.push_back(parse_mount_kind(k));
        }
    }
    if (tree.get_optional<std::string>("layout.spacings")) {
        s.spacings = get_double_list(tree, "layout.spacings");
    }
    if (tree.get_optional<std::string>("layout.heights")) {
        s.heights = get_double_list(tree, "layout.heights");
    }
    for (auto kind : {MountKind::tilt, MountKind::vertical, MountKind::tracking}) {
        s.clearance[index_of(kind)] = get_double(tree, fmt::format("layout.clearance_{}", to_string(kind)));
        s.bifaciality[index_of(kind)] = get_double(tree, fmt::format("layout.bifaciality_{}", to_string(kind)));
    }
    s.tilt_deg = get_double(tree, "layout.tilt_deg");
    read_into(tree, "layout.max_tracker_rotation_deg", s.max_tracker_rotation_deg);
    read_into(tree, "layout.field_width", s.field_width);
    read_into(tree, "layout.field_length", s.field_length);

    read_into(tree, "panel.stc_efficiency", s.panel.stc_efficiency);
    read_into(tree, "panel.system_efficiency", s.panel.system_efficiency);
    if (const auto b = get_double(tree, "panel.bypass_blocks")) {
        s.panel.total_blocks = static_cast<int>(*b);
        if (static_cast<double>(s.panel.total_blocks) != *b) {
            throw InputError("config: panel.bypass_blocks must be an integer");
        }
    }
    read_into(tree, "panel.angular_loss_coeff", s.panel.angular_loss_coeff);
    read_into(tree, "panel.u0", s.panel.u0);
    read_into(tree, "panel.u1", s.panel.u1);
    read_into(tree, "panel.wind_shear_exponent", s.panel.wind_shear_exponent);
    read_into(tree, "panel.wind_reference_height", s.panel.wind_reference_height);

    read_into(tree, "sky.albedo", s.albedo);

    read_into(tree, "ground.field_width", s.ground_width);
    read_into(tree, "ground.field_length", s.ground_length);
    read_into(tree, "ground.cell_size", s.ground_cell_size);
    if (const auto p = get_string(tree, "ground.map_months")) {
        s.map_period = parse_period(*p, "ground.map_months");
    }
    if (const auto p = get_string(tree, "ground.growing_season")) {
        s.growing_season = parse_period(*p, "ground.growing_season");
    }
    if (const auto m = get_string(tree, "ground.map_spacing"); m && *m == "all") {
        s.map_spacing.reset();
        s.map_height.reset();
    } else {
        if (const auto v = get_double(tree, "ground.map_spacing")) {
            s.map_spacing = *v;
        }
        if (const auto v = get_double(tree, "ground.map_height")) {
            s.map_height = *v;
        }
    }

    read_into(tree, "crops.low", s.thresholds.low);
    read_into(tree, "crops.medium", s.thresholds.medium);
    read_into(tree, "crops.high", s.thresholds.high);

    if (const auto w = get_string(tree, "inputs.weather")) {
        s.weather_path = resolve(base_dir, *w);
    }
    if (const auto p = get_string(tree, "inputs.prices")) {
        s.prices_path = resolve(base_dir, *p);
    }
    read_into(tree, "inputs.price_utc_offset_hours", s.price_utc_offset_hours);
    if (const auto y = get_double(tree, "inputs.year")) {
        s.year = static_cast<int>(*y);
    }

    if (const auto d = get_string(tree, "output.directory")) {
        s.output_dir = resolve(base_dir, *d);
    } else {
        s.output_dir = resolve(base_dir, s.output_dir);
    }
    if (const auto t = get_double(tree, "output.threads")) {
        if (!(*t >= 1.0)) {
            throw InputError("config: output.threads must be >= 1");
        }
        s.threads = static_cast<unsigned>(*t);
    }

    if (tree.get_child_optional("potential")) {
        PotentialConfig p;
        if (const auto v = get_string(tree, "potential.classes")) {
            p.classes_path = resolve(base_dir, *v);
        }
        if (const auto v = get_string(tree, "potential.regions")) {
            p.regions_path = resolve(base_dir, *v);
        }
        if (const auto v = get_string(tree, "potential.class_sets")) {
            p.class_sets_path = resolve(base_dir, *v);
        }
        if (const auto v = get_string(tree, "potential.region_yields")) {
            p.region_yields_path = resolve(base_dir, *v);
        }
        read_into(tree, "potential.buffer_m", p.buffer_m);
        read_into(tree, "potential.capacity_density", p.capacity_density);
        read_into(tree, "potential.demand_twh", p.demand_twh);
        s.potential = p;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    const auto text = read_text_file(path);
    const auto dir = std::filesystem::path(path).parent_path().string();
    return parse_scenario(text, dir.empty() ? "." : dir);
}

}  // namespace apv
