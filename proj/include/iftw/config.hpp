// SPDX-License-Identifier: Apache-2.0
//
// Scenario files. The format is a YAML mapping with one section per model
// component; see docs/config.md for the grammar and every key.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iftw/antenna.hpp"
#include "iftw/geometry.hpp"
#include "iftw/link_budget.hpp"
#include "iftw/refl_prob.hpp"
#include "iftw/secondary_fx.hpp"
#include "iftw/sweep.hpp"

namespace iftw {

//! Carries every problem found while loading, not just the first.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const noexcept { return problems_; }

  private:
    std::vector<std::string> problems_;
};

struct MitigationConfig
{
    double delta_h = 0.7;      // m
    double road_width = 10.0;  // m
    double phi_deg = 8.0;      // beamwidth the tilt is checked against
};

struct SweepSpec
{
    SweepAxis axis = SweepAxis::Density;
    SweepRange range;
};

struct ExperimentConfig
{
    std::vector<EffectKind> effects;
    std::optional<SweepSpec> sweep;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string output;
};

struct ScenarioConfig
{
    TopologySpec topology;
    AntennaPattern antenna;
    RadioParams radio;
    std::optional<double> calibrate_to_sinr;  // dB
    VehicleStats traffic;
    double gamma_angle_deg = 5.0;
    DensityMapping density_mapping;
    BuildingConfig building;
    MitigationConfig mitigation;
    ExperimentConfig experiment;

    Topology build() const { return build_topology(topology); }
    ReflectionRegionParams region() const;
    //! Radio params with tx_power replaced by the calibrated value, if enabled.
    RadioParams calibrated_radio() const;
};

//! d0 = 75 m, theta = 11.7 deg, phi = 15 deg, G_h = 23.18 dBi, G_l = 2 dBi,
//! N = 10, baseline SINR calibrated to 41.1808 dB.
ScenarioConfig paper_baseline_config();

std::optional<ScenarioConfig> preset_config(std::string_view name);

ScenarioConfig parse_config(const std::string& text, const std::string& source = "<string>");
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace iftw
