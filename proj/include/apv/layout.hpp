#pragma once

#include "apv/geometry.hpp"
#include "apv/solar_geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apv {

enum class MountKind { tilt, vertical, tracking };

std::string_view to_string(MountKind kind);
// Throws InputError for unknown names.
MountKind parse_mount_kind(std::string_view name);

struct LayoutConfig {
    MountKind kind = MountKind::tilt;
    double spacing = 6.0;  // row pitch s, m
    double height = 2.0;   // collector extent h along its own plane, m
    std::optional<double> clearance;  // lowest edge above ground; default 2 (tilt) or 1
    double field_width = 100.0;   // east-west extent, m
    double field_length = 100.0;  // north-south extent, m
    std::optional<double> tilt_deg;  // tilt mounts only; default optimal_tilt_deg(latitude)
    std::optional<double> bifaciality;  // default 0.8 for vertical, 0 otherwise
    double max_tracker_rotation_deg = 90.0;
};

// Immutable row geometry. Frame: x east, y north, z up; the field spans
// [0, field_width] x [0, field_length]. Row k sits on reference line k*s:
//  - tilt: rows run east-west, lower edge at y = k*s, facing south;
//  - vertical: rows run north-south in the plane x = k*s, front faces east;
//  - tracking: north-south axis at x = k*s, height clearance + h/2.
class Layout {
public:
    MountKind kind() const { return kind_; }
    double spacing() const { return spacing_; }
    double height() const { return height_; }
    double clearance() const { return clearance_; }
    double field_width() const { return field_width_; }
    double field_length() const { return field_length_; }
    double field_area() const { return field_width_ * field_length_; }
    double tilt() const { return tilt_; }
    double bifaciality() const { return bifaciality_; }
    double max_tracker_rotation() const { return max_rotation_; }

    std::size_t row_count() const { return row_offsets_.size(); }
    const std::vector<double>& row_offsets() const { return row_offsets_; }
    double row_length() const;
    double collector_area() const { return height_ * row_length(); }
    double total_collector_area() const { return collector_area() * static_cast<double>(row_count()); }

    PlaneOrientation front_orientation(const SolarPosition& sun) const;
    // Back face of a bifacial collector (azimuth + 180 deg).
    PlaneOrientation rear_orientation(const PlaneOrientation& front) const;
    bool has_rear() const { return bifaciality_ > 0.0; }

    // One opaque rectangle per row for the given front orientation.
    // Rect u runs along the row, v from the lowest edge up the collector.
    std::vector<Rect3> collectors(const PlaneOrientation& front) const;

    // Height of the collector centre above ground.
    double mid_height(const PlaneOrientation& front) const;

private:
    friend Layout build_layout(const LayoutConfig&, double);
    friend Layout empty_layout(double, double);

    MountKind kind_ = MountKind::tilt;
    double spacing_ = 0.0;
    double height_ = 0.0;
    double clearance_ = 0.0;
    double field_width_ = 0.0;
    double field_length_ = 0.0;
    double tilt_ = 0.0;
    double bifaciality_ = 0.0;
    double max_rotation_ = kPi / 2;
    std::vector<double> row_offsets_;
};

// Throws std::invalid_argument for non-physical parameters or overlapping rows.
Layout build_layout(const LayoutConfig& config, double latitude_deg);

// Layout with no collectors, for the unshaded reference.
Layout empty_layout(double field_width, double field_length);

}  // namespace apv
