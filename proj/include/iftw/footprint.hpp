// SPDX-License-Identifier: Apache-2.0
//
// Geometric reflection-region footprint for one vehicle, used by the Monte
// Carlo oracle. In link-local coordinates (u along the road, v across it)
// it is the trapezoid
//
//   (0, 0) -> (l, 0) -> (l + 2c/D, D) -> (0, D),   D = d tan(theta),
//   c(w) = tan(theta - gamma) * (tan(theta) * w - w^2 / 4),
//
// whose area D*l + c(w) has expectation Lambda_RR / lambda term by term.
// A vehicle of width w and length l produces a bounce when its centre lies
// inside. See docs/reflection_footprint.md.
#pragma once

#include <array>
#include <cmath>

#include "iftw/geometry.hpp"
#include "iftw/refl_prob.hpp"
#include "iftw/units.hpp"

namespace iftw {

struct ReflectionFootprint
{
    double depth = 0.0;  // D, across the road
    double base = 0.0;   // side at v = 0
    double top = 0.0;    // side at v = depth

    //! Signed shoelace area of the four vertices (may be negative for
    //! non-physical inputs such as l < 0).
    double signed_area() const { return depth * 0.5 * (base + top); }

    std::array<Vec2, 4> vertices() const
    {
        return {Vec2{0.0, 0.0}, Vec2{base, 0.0}, Vec2{top, depth}, Vec2{0.0, depth}};
    }

    bool contains(double u, double v) const
    {
        if (v < 0.0 || v > depth || u < 0.0)
            return false;
        return u <= base + (top - base) * (v / depth);
    }
};

//! Per-link constants shared by every vehicle of a region.
struct FootprintShape
{
    double depth = 0.0;      // d tan(theta)
    double tan_theta = 0.0;
    double tan_tilt = 0.0;   // tan(theta - gamma)

    explicit FootprintShape(const ReflectionRegionParams& region)
        : depth(region.d * std::tan(deg_to_rad(region.theta_deg))),
          tan_theta(std::tan(deg_to_rad(region.theta_deg))),
          tan_tilt(std::tan(deg_to_rad(region.theta_deg - region.gamma_angle_deg)))
    {
    }

    double width_term(double w) const { return tan_tilt * (tan_theta * w - 0.25 * w * w); }

    ReflectionFootprint for_vehicle(double w, double l) const
    {
        return {depth, l, l + 2.0 * width_term(w) / depth};
    }
};

}  // namespace iftw
