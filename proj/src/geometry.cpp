// SPDX-License-Identifier: Apache-2.0
#include "iftw/geometry.hpp"

#include <cmath>
#include <string>

#include "iftw/error.hpp"
#include "iftw/units.hpp"

namespace iftw {

namespace {

void require_positive(double value, const char* field)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw ValidationError(field, "must be a positive finite number, got " + std::to_string(value));
}

void require_theta(double theta_deg, const char* field)
{
    if (!(theta_deg > 0.0 && theta_deg < 90.0))
        throw ValidationError(field, "must lie in (0, 90) degrees, got " + std::to_string(theta_deg));
}

}  // namespace

const Node& Topology::node(int i) const
{
    if (i < 0 || i >= node_count())
        throw ValidationError("node_index", "index " + std::to_string(i) + " out of range [0, "
                                                + std::to_string(node_count()) + ")");
    return nodes_[static_cast<std::size_t>(i)];
}

double Topology::hop_length() const
{
    return (spacing_d0_ / 2.0) / std::cos(deg_to_rad(theta_deg_));
}

double Topology::span() const
{
    return (node_count() - 1) * spacing_d0_ / 2.0;
}

double Topology::derived_theta_deg() const
{
    const Vec2 d = nodes_[1].planar() - nodes_[0].planar();
    return rad_to_deg(std::atan2(std::abs(d.y), std::abs(d.x)));
}

double Topology::distance(int i, int j) const
{
    const Vec2 d = node(j).planar() - node(i).planar();
    return std::hypot(d.x, d.y);
}

Topology build_topology(const TopologySpec& spec)
{
    if (spec.node_count < 2)
        throw ValidationError("node_count", "must be >= 2, got " + std::to_string(spec.node_count));
    require_positive(spec.spacing_d0, "spacing_d0");
    require_positive(spec.height_side_a, "height_side_a");
    require_positive(spec.height_side_b, "height_side_b");
    if (spec.theta_deg.has_value() == spec.lateral_offset.has_value())
        throw ValidationError("theta", "supply exactly one of theta or lateral_offset");

    const double half = spec.spacing_d0 / 2.0;
    double theta_deg = 0.0;
    double offset = 0.0;
    if (spec.theta_deg)
    {
        theta_deg = *spec.theta_deg;
        require_theta(theta_deg, "theta");
        offset = half * std::tan(deg_to_rad(theta_deg));
    }
    else
    {
        offset = *spec.lateral_offset;
        require_positive(offset, "lateral_offset");
        theta_deg = rad_to_deg(std::atan2(offset, half));
        require_theta(theta_deg, "theta");
    }

    Topology topo;
    topo.spacing_d0_ = spec.spacing_d0;
    topo.theta_deg_ = theta_deg;
    topo.road_width_ = offset;
    topo.height_a_ = spec.height_side_a;
    topo.height_b_ = spec.height_side_b;
    topo.nodes_.reserve(static_cast<std::size_t>(spec.node_count));
    for (int i = 0; i < spec.node_count; ++i)
    {
        const bool on_a = (i % 2) == 0;
        topo.nodes_.push_back(Node{.x = i * half,
                                   .side = on_a ? Side::A : Side::B,
                                   .y = on_a ? 0.0 : offset,
                                   .z = on_a ? spec.height_side_a : spec.height_side_b});
    }
    return topo;
}

double interference_clearance_deg(double theta_deg)
{
    const double t = deg_to_rad(theta_deg);
    return rad_to_deg(t - std::atan(std::tan(t) / 3.0));
}

bool check_interference_free(double theta_deg, double phi_deg)
{
    require_theta(theta_deg, "theta");
    if (!(phi_deg > 0.0 && phi_deg < 180.0))
        throw ValidationError("phi", "must lie in (0, 180) degrees, got " + std::to_string(phi_deg));
    return interference_clearance_deg(theta_deg) > phi_deg / 2.0;
}

double min_interference_free_theta(double phi_deg, double tol_deg)
{
    // The clearance peaks at 30 deg (theta = 60 deg); beyond phi = 60 no theta works.
    if (!(phi_deg > 0.0 && phi_deg < 60.0))
        throw ValidationError("phi", "threshold exists only for phi in (0, 60) degrees");
    double lo = 0.0;   // predicate false
    double hi = 60.0;  // predicate true
    while (hi - lo > tol_deg)
    {
        const double mid = 0.5 * (lo + hi);
        if (interference_clearance_deg(mid) > phi_deg / 2.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool MitigationGeometry::eliminates_building_reflection(double phi_deg, double height_tolerance) const
{
    if (!(phi_deg > 0.0 && phi_deg < 180.0))
        throw ValidationError("phi", "must lie in (0, 180) degrees, got " + std::to_string(phi_deg));
    if (height_tolerance < 0.0)
        throw ValidationError("height_tolerance", "must be >= 0");
    const double slack = rad_to_deg(std::atan(height_tolerance / road_width));
    return theta1_deg >= 0.0 && theta1_deg <= phi_deg / 2.0 + slack;
}

MitigationGeometry mitigation_tilt(double delta_h, double road_width)
{
    if (!(delta_h >= 0.0) || !std::isfinite(delta_h))
        throw ValidationError("delta_h", "must be >= 0, got " + std::to_string(delta_h));
    require_positive(road_width, "road_width");
    return {delta_h, road_width, rad_to_deg(std::atan(delta_h / road_width))};
}

}  // namespace iftw
