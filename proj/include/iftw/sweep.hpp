// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "iftw/antenna.hpp"
#include "iftw/geometry.hpp"
#include "iftw/link_budget.hpp"
#include "iftw/monte_carlo.hpp"
#include "iftw/refl_prob.hpp"
#include "iftw/secondary_fx.hpp"

namespace iftw {

enum class SweepAxis { BuildingGamma, BuildingD1, Density, RelayHeight };

std::string_view to_string(SweepAxis axis);
std::optional<SweepAxis> sweep_axis_from_string(std::string_view name);
inline bool is_probability_axis(SweepAxis a) { return a == SweepAxis::Density || a == SweepAxis::RelayHeight; }

struct SweepRange
{
    std::vector<double> values;

    static SweepRange linspace(double from, double to, int points);
    //! Nonempty, finite and strictly monotone (either direction).
    void validate() const;
};

struct ProbabilityPoint
{
    double x = 0.0;
    double p_analytic = 0.0;
    double p_mc = 0.0;
    double half_width = 0.0;
};

struct LossPoint
{
    double x = 0.0;
    double reduction = 0.0;       // dB
    double rx_offset_deg = 0.0;
    double path_length = 0.0;     // m
};

//! Reflection probability along density or relay height. Every point uses
//! the same MC seed (common random numbers), so neighbouring points are
//! positively correlated and the output is independent of thread count.
std::vector<ProbabilityPoint> sweep_refl_probability(SweepAxis axis, const SweepRange& range,
                                                     const VehicleStats& stats,
                                                     const ReflectionRegionParams& region,
                                                     int node_count, const McOptions& options);

//! Building-reflection SINR loss along Gamma or setback d1.
std::vector<LossPoint> sweep_building_loss(SweepAxis axis, const SweepRange& range,
                                           const Topology& topology, const AntennaPattern& antenna,
                                           const RadioParams& radio, const BuildingConfig& building);

}  // namespace iftw
