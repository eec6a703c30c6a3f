#include "apv/layout.hpp"

#include "apv/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <spdlog/spdlog.h>
#include <stdexcept>

namespace apv {

std::string_view to_string(MountKind kind) {
    switch (kind) {
    case MountKind::tilt:
        return "tilt";
    case MountKind::vertical:
        return "vertical";
    case MountKind::tracking:
        return "tracking";
    }
    return "?";
}

MountKind parse_mount_kind(std::string_view name) {
    if (name == "tilt") {
        return MountKind::tilt;
    }
    if (name == "vertical") {
        return MountKind::vertical;
    }
    if (name == "tracking") {
        return MountKind::tracking;
    }
    throw InputError(fmt::format("unknown mount kind '{}' (expected tilt, vertical or tracking)", name));
}

namespace {

constexpr std::array kStudiedSpacings{3.0, 4.5, 6.0, 7.5, 9.0, 12.0};
constexpr std::array kStudiedHeights{1.0, 2.0, 3.0};

bool in_design_space(double value, std::span<const double> allowed) {
    return std::any_of(allowed.begin(), allowed.end(), [&](double a) { return std::abs(a - value) < 1e-9; });
}

}  // namespace

double Layout::row_length() const { return kind_ == MountKind::tilt ? field_width_ : field_length_; }

PlaneOrientation Layout::front_orientation(const SolarPosition& sun) const {
    switch (kind_) {
    case MountKind::tilt:
        return {tilt_, 0.0};
    case MountKind::vertical:
        return {kPi / 2, -kPi / 2};
    case MountKind::tracking:
        return tracking_orientation(sun, max_rotation_);
    }
    return {};
}

PlaneOrientation Layout::rear_orientation(const PlaneOrientation& front) const {
    double az = front.azimuth + kPi;
    if (az > kPi) {
        az -= 2 * kPi;
    }
    return {kPi - front.tilt, az};
}

std::vector<Rect3> Layout::collectors(const PlaneOrientation& front) const {
    std::vector<Rect3> out;
    out.reserve(row_offsets_.size());
    switch (kind_) {
    case MountKind::tilt: {
        const Vec3 u{field_width_, 0.0, 0.0};
        const Vec3 v{0.0, height_ * std::cos(tilt_), height_ * std::sin(tilt_)};
        for (double y : row_offsets_) {
            out.push_back({{0.0, y, clearance_}, u, v});
        }
        break;
    }
    case MountKind::vertical: {
        const Vec3 u{0.0, field_length_, 0.0};
        const Vec3 v{0.0, 0.0, height_};
        for (double x : row_offsets_) {
            out.push_back({{x, 0.0, clearance_}, u, v});
        }
        break;
    }
    case MountKind::tracking: {
        const double rotation = front.azimuth > 0.0 ? front.tilt : -front.tilt;
        // In-plane cross-axis direction, perpendicular to the normal (-sin r, 0, cos r).
        const Vec3 w{std::cos(rotation), 0.0, std::sin(rotation)};
        const Vec3 u{0.0, field_length_, 0.0};
        const double axis_z = clearance_ + height_ / 2;
        for (double x : row_offsets_) {
            const Vec3 axis{x, 0.0, axis_z};
            Vec3 origin = axis - (height_ / 2) * w;
            Vec3 v = height_ * w;
            if (v.z < 0.0) {
                origin = axis + (height_ / 2) * w;
                v = -1.0 * v;
            }
            out.push_back({origin, u, v});
        }
        break;
    }
    }
    return out;
}

double Layout::mid_height(const PlaneOrientation& front) const {
    switch (kind_) {
    case MountKind::tilt:
        return clearance_ + height_ * std::sin(tilt_) / 2;
    case MountKind::vertical:
    case MountKind::tracking:
        (void)front;
        return clearance_ + height_ / 2;
    }
    return clearance_;
}

Layout build_layout(const LayoutConfig& config, double latitude_deg) {
    if (!(config.spacing > 0.0)) {
        throw std::invalid_argument(fmt::format("row spacing must be > 0 (got {})", config.spacing));
    }
    if (!(config.height > 0.0)) {
        throw std::invalid_argument(fmt::format("collector height must be > 0 (got {})", config.height));
    }
    if (!(config.field_width > 0.0) || !(config.field_length > 0.0)) {
        throw std::invalid_argument("field dimensions must be > 0");
    }
    if (!in_design_space(config.spacing, kStudiedSpacings)) {
        spdlog::warn("row spacing {} m is outside the studied set (3, 4.5, 6, 7.5, 9, 12)", config.spacing);
    }
    if (!in_design_space(config.height, kStudiedHeights)) {
        spdlog::warn("collector height {} m is outside the studied set (1, 2, 3)", config.height);
    }

    Layout l;
    l.kind_ = config.kind;
    l.spacing_ = config.spacing;
    l.height_ = config.height;
    l.clearance_ = config.clearance.value_or(config.kind == MountKind::tilt ? 2.0 : 1.0);
    if (!(l.clearance_ >= 0.0)) {
        throw std::invalid_argument(fmt::format("clearance must be >= 0 (got {})", l.clearance_));
    }
    l.field_width_ = config.field_width;
    l.field_length_ = config.field_length;
    l.max_rotation_ = deg2rad(config.max_tracker_rotation_deg);
    if (!(l.max_rotation_ >= 0.0 && l.max_rotation_ <= kPi / 2)) {
        throw std::invalid_argument("max tracker rotation must be within [0, 90] deg");
    }

    double footprint = 0.0;
    switch (config.kind) {
    case MountKind::tilt: {
        const double tilt_deg = config.tilt_deg.value_or(optimal_tilt_deg(latitude_deg));
        if (!(tilt_deg > 0.0 && tilt_deg < 90.0)) {
            throw std::invalid_argument(fmt::format("tilt must be within (0, 90) deg (got {})", tilt_deg));
        }
        l.tilt_ = deg2rad(tilt_deg);
        footprint = l.height_ * std::cos(l.tilt_);
        break;
    }
    case MountKind::vertical:
        l.tilt_ = kPi / 2;
        footprint = 0.0;
        break;
    case MountKind::tracking:
        l.tilt_ = 0.0;
        footprint = l.height_;
        break;
    }
    if (footprint > config.spacing + 1e-9) {
        throw std::invalid_argument(fmt::format(
            "rows overlap: horizontal collector footprint {:.3f} m exceeds spacing {} m", footprint, config.spacing));
    }

    l.bifaciality_ = config.bifaciality.value_or(config.kind == MountKind::vertical ? 0.8 : 0.0);
    if (!(l.bifaciality_ >= 0.0 && l.bifaciality_ <= 1.0)) {
        throw std::invalid_argument("bifaciality must be within [0, 1]");
    }

    const double across = config.kind == MountKind::tilt ? config.field_length : config.field_width;
    const auto rows = static_cast<std::size_t>(std::floor(across / config.spacing + 1e-9)) + 1;
    l.row_offsets_.reserve(rows);
    for (std::size_t k = 0; k < rows; ++k) {
        l.row_offsets_.push_back(static_cast<double>(k) * config.spacing);
    }
    return l;
}

Layout empty_layout(double field_width, double field_length) {
    Layout l;
    l.kind_ = MountKind::tilt;
    l.field_width_ = field_width;
    l.field_length_ = field_length;
    l.spacing_ = std::max(field_width, field_length);
    l.height_ = 0.0;
    l.tilt_ = deg2rad(30.0);
    return l;
}

}  // namespace apv
