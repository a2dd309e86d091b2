// SPDX-License-Identifier: Apache-2.0
#include "iftw/sweep.hpp"

#include <cmath>

#include "iftw/error.hpp"

namespace iftw {

std::string_view to_string(SweepAxis axis)
{
    switch (axis)
    {
        case SweepAxis::BuildingGamma: return "building_gamma";
        case SweepAxis::BuildingD1: return "building_d1";
        case SweepAxis::Density: return "density";
        case SweepAxis::RelayHeight: return "relay_height";
    }
    return "unknown";
}

std::optional<SweepAxis> sweep_axis_from_string(std::string_view name)
{
    for (auto a : {SweepAxis::BuildingGamma, SweepAxis::BuildingD1, SweepAxis::Density,
                   SweepAxis::RelayHeight})
    {
        if (to_string(a) == name)
            return a;
    }
    return std::nullopt;
}

SweepRange SweepRange::linspace(double from, double to, int points)
{
    if (points < 1)
        throw ValidationError("sweep.points", "must be >= 1");
    SweepRange r;
    r.values.reserve(static_cast<std::size_t>(points));
    if (points == 1)
    {
        r.values.push_back(from);
        return r;
    }
    const double step = (to - from) / (points - 1);
    for (int i = 0; i < points; ++i)
        r.values.push_back(i == points - 1 ? to : from + i * step);
    return r;
}

void SweepRange::validate() const
{
    if (values.empty())
        throw ValidationError("sweep.range", "must contain at least one value");
    for (double v : values)
    {
        if (!std::isfinite(v))
            throw ValidationError("sweep.range", "values must be finite");
    }
    if (values.size() < 2)
        return;
    const bool up = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i)
    {
        if (up ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1]))
            throw ValidationError("sweep.range", "values must be strictly monotone");
    }
}

std::vector<ProbabilityPoint> sweep_refl_probability(SweepAxis axis, const SweepRange& range,
                                                     const VehicleStats& stats,
                                                     const ReflectionRegionParams& region,
                                                     int node_count, const McOptions& options)
{
    if (!is_probability_axis(axis))
        throw ValidationError("sweep.axis", "probability sweeps take density or relay_height");
    range.validate();

    std::vector<ProbabilityPoint> rows;
    rows.reserve(range.values.size());
    for (double x : range.values)
    {
        VehicleStats s = stats;
        ReflectionRegionParams g = region;
        if (axis == SweepAxis::Density)
            s.density_lambda = x;
        else
            g.relay_height = x;
        const ReflectionStats r = monte_carlo_reflection(s, g, node_count, options);
        rows.push_back({x, r.p_refl, r.mc.probability, r.mc.half_width});
    }
    return rows;
}

std::vector<LossPoint> sweep_building_loss(SweepAxis axis, const SweepRange& range,
                                           const Topology& topology, const AntennaPattern& antenna,
                                           const RadioParams& radio, const BuildingConfig& building)
{
    if (is_probability_axis(axis))
        throw ValidationError("sweep.axis", "loss sweeps take building_gamma or building_d1");
    range.validate();

    // Validate serially: exceptions must not escape the parallel region.
    std::vector<BuildingConfig> configs;
    configs.reserve(range.values.size());
    for (double x : range.values)
    {
        BuildingConfig b = building;
        if (axis == SweepAxis::BuildingGamma)
            b.reflection_coeff_gamma = x;
        else
            b.setback_d1 = x;
        b.validate();
        configs.push_back(b);
    }
    (void)EffectScenario::standard(EffectKind::BuildingDouble, topology);

    std::vector<LossPoint> rows(configs.size());
    const auto n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i)
    {
        const auto k = static_cast<std::size_t>(i);
        const BuildingOutcome o = evaluate_building_reflection(topology, antenna, radio, configs[k]);
        rows[k] = {range.values[k], o.reduction, o.path.rx_offset_deg, o.path.length};
    }
    return rows;
}

}  // namespace iftw
