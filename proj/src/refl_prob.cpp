// SPDX-License-Identifier: Apache-2.0
#include "iftw/refl_prob.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "iftw/error.hpp"
#include "iftw/units.hpp"

namespace iftw {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

void require(bool ok, const char* field, const char* what)
{
    if (!ok)
        throw ValidationError(field, what);
}

}  // namespace

void VehicleStats::validate() const
{
    require(width_mean > 0.0, "traffic.width_mean", "must be > 0");
    require(length_mean > 0.0, "traffic.length_mean", "must be > 0");
    require(height_mean > 0.0, "traffic.height_mean", "must be > 0");
    require(width_sd >= 0.0, "traffic.width_sd", "must be >= 0");
    require(length_sd >= 0.0, "traffic.length_sd", "must be >= 0");
    require(height_sd >= 0.0, "traffic.height_sd", "must be >= 0");
    require(density_lambda >= 0.0 && std::isfinite(density_lambda), "traffic.density",
            "must be finite and >= 0");
}

void ReflectionRegionParams::validate() const
{
    require(d > 0.0, "region.d", "must be > 0");
    require(theta_deg > 0.0 && theta_deg < 90.0, "region.theta", "must lie in (0, 90) degrees");
    require(gamma_angle_deg > 0.0 && gamma_angle_deg < theta_deg, "region.gamma_angle",
            "must satisfy 0 < gamma < theta");
    require(phi_deg > 0.0 && phi_deg < 180.0, "region.phi", "must lie in (0, 180) degrees");
    require(relay_height > 0.0, "region.relay_height", "must be > 0");
}

double lambda_rr(const VehicleStats& stats, const ReflectionRegionParams& region)
{
    stats.validate();
    region.validate();
    const double tan_t = std::tan(deg_to_rad(region.theta_deg));
    const double tan_tg = std::tan(deg_to_rad(region.theta_deg - region.gamma_angle_deg));
    const double width_second_moment = stats.width_mean * stats.width_mean + stats.width_sd * stats.width_sd;
    const double lam = stats.density_lambda;
    const double expected = lam * region.d * tan_t * stats.length_mean
                            + lam * tan_tg * tan_t * stats.width_mean
                            - 0.25 * lam * tan_tg * width_second_moment;
    if (expected < 0.0)
        throw ValidationError("traffic", "vehicle statistics give a negative reflection-region area");
    return expected;
}

double reflection_height_window(const ReflectionRegionParams& region)
{
    region.validate();
    const double tan_t = std::tan(deg_to_rad(region.theta_deg));
    return 0.5 * region.d * std::tan(deg_to_rad(region.phi_deg / 2.0)) * std::sqrt(tan_t * tan_t + 9.0);
}

double eta_height_fraction(const VehicleStats& stats, const ReflectionRegionParams& region)
{
    stats.validate();
    const double h_refl = reflection_height_window(region);
    const double upper = region.relay_height;
    const double lower = region.relay_height - h_refl;
    if (h_refl <= 0.0)
        return 0.0;
    if (stats.height_sd == 0.0)
        return (stats.height_mean > lower && stats.height_mean <= upper) ? 1.0 : 0.0;
    const double eta = normal_cdf((upper - stats.height_mean) / stats.height_sd)
                       - normal_cdf((lower - stats.height_mean) / stats.height_sd);
    return std::clamp(eta, 0.0, 1.0);
}

double reflection_probability(const VehicleStats& stats, const ReflectionRegionParams& region,
                              int node_count)
{
    if (node_count < 3)
        throw ValidationError("node_count", "reflection probability needs N >= 3, got "
                                                + std::to_string(node_count));
    const double exponent = (node_count - 3) * eta_height_fraction(stats, region) * lambda_rr(stats, region);
    return std::clamp(-std::expm1(-exponent), 0.0, 1.0) + 0.0;  // no -0
}

double DensityMapping::density_for(double vehicles) const
{
    require(road_length > 0.0 && carriageway_width > 0.0, "traffic.road_area", "must be > 0");
    require(vehicles >= 0.0, "traffic.vehicles", "must be >= 0");
    return vehicles / (road_length * carriageway_width);
}

double DensityMapping::vehicles_for(double density) const
{
    return density * road_length * carriageway_width;
}

}  // namespace iftw
