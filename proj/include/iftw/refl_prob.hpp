// SPDX-License-Identifier: Apache-2.0
//
// Closed-form occurrence probability of roof-bounce (Type II) reflections.
//
// Vehicle centres form a homogeneous Poisson process of intensity
// `density_lambda` (vehicles/m^2) with independent normal widths, lengths and
// heights. One reflection region (RR) belongs to each of the N-3 interior
// links; its expected occupancy is lambda_rr(). Only vehicles whose roof lies
// in the height window (h_r - h_refl, h_r] can produce the bounce, a thinning
// by eta_height_fraction(). Occupancies of disjoint regions add, so
//   P_refl = 1 - exp(-(N - 3) * eta * Lambda_RR).
#pragma once

namespace iftw {

struct VehicleStats
{
    double width_mean = 2.3;    // m
    double width_sd = 1.2;
    double length_mean = 5.5;
    double length_sd = 3.5;
    double height_mean = 3.0;
    double height_sd = 1.5;
    double density_lambda = 0.0;  // vehicles / m^2

    void validate() const;
};

struct ReflectionRegionParams
{
    double d = 75.0;            // m, same-side node spacing d0
    double theta_deg = 11.7;
    double gamma_angle_deg = 5.0;
    double phi_deg = 15.0;
    double relay_height = 3.5;  // m, h_r

    void validate() const;
};

//! Expected vehicle count in one reflection region:
//!   lambda*d*tan(t)*mu_l + lambda*tan(t-g)*tan(t)*mu_w
//!     - lambda*tan(t-g)*(mu_w^2 + sd_w^2)/4
double lambda_rr(const VehicleStats& stats, const ReflectionRegionParams& region);

//! Depth of the bounce-capable height window, d/2 * tan(phi/2) * sqrt(tan^2(t) + 9).
double reflection_height_window(const ReflectionRegionParams& region);

//! P(h_r - h_refl < H <= h_r) for H ~ N(mu_h, sd_h).
double eta_height_fraction(const VehicleStats& stats, const ReflectionRegionParams& region);

//! 1 - exp(-(N - 3) * eta * Lambda_RR). Requires N >= 3.
double reflection_probability(const VehicleStats& stats, const ReflectionRegionParams& region,
                              int node_count);

//! Converts a vehicle count on a stretch of road into a PPP intensity:
//! density = vehicles / (road_length * carriageway_width).
struct DensityMapping
{
    double road_length = 1000.0;      // m
    double carriageway_width = 20.0;  // m

    double density_for(double vehicles) const;
    double vehicles_for(double density) const;
};

}  // namespace iftw
