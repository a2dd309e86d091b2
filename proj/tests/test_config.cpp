// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <string>

#include "iftw/config.hpp"

using namespace iftw;

namespace {

std::vector<std::string> problems_of(const std::string& text)
{
    try
    {
        (void)parse_config(text, "cfg.yaml");
    }
    catch (const ConfigError& e)
    {
        return e.problems();
    }
    return {};
}

bool any_contains(const std::vector<std::string>& v, const std::string& needle)
{
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST_CASE("shipped baseline file matches the built-in preset")
{
    const auto file = load_config(IFTW_SOURCE_DIR "/configs/paper_baseline.yaml");
    const auto preset = *preset_config("paper_baseline");
    CHECK(file.topology.node_count == preset.topology.node_count);
    CHECK(*file.topology.theta_deg == *preset.topology.theta_deg);
    CHECK(file.antenna.side_gain == preset.antenna.side_gain);
    CHECK(*file.calibrate_to_sinr == *preset.calibrate_to_sinr);
    CHECK(file.traffic.density_lambda == preset.traffic.density_lambda);
    CHECK(file.building.reflection_coeff_gamma == preset.building.reflection_coeff_gamma);
    CHECK(file.experiment.effects == preset.experiment.effects);
    CHECK(file.experiment.sweep->range.values == preset.experiment.sweep->range.values);
    CHECK(file.experiment.seed == preset.experiment.seed);
    CHECK(file.calibrated_radio().tx_power == doctest::Approx(preset.calibrated_radio().tx_power));
    CHECK_FALSE(preset_config("unknown").has_value());
}

TEST_CASE("empty and malformed input")
{
    auto p = problems_of("");
    REQUIRE(p.size() == 1);
    CHECK(any_contains(p, "empty configuration"));
    CHECK(any_contains(problems_of("# only a comment\n"), "empty configuration"));
    CHECK(any_contains(problems_of("topology: [1, 2\n"), "parse error"));
    CHECK(any_contains(problems_of("- 1\n- 2\n"), "expected a mapping"));
}

TEST_CASE("unknown keys are reported with their position")
{
    const auto p = problems_of("topology:\n  theta: 12\n  thetta: 13\n");
    REQUIRE(p.size() == 1);
    CHECK(p[0].find("cfg.yaml:3:3") == 0);
    CHECK(any_contains(p, "topology.thetta: unknown key"));
    CHECK(any_contains(problems_of("radar: {}\n"), "radar: unknown key"));
}

TEST_CASE("every problem is reported at once")
{
    const auto p = problems_of("topology:\n  theta: 12\n  node_count: two\n"
                               "antenna:\n  phi: -3\n"
                               "building:\n  material: wood\n"
                               "experiment:\n  effects: [side_lobe_short, vehicle_type_i]\n  trials: 0\n");
    CHECK(any_contains(p, "topology.node_count: cannot convert 'two'"));
    CHECK(any_contains(p, "unknown material 'wood'"));
    CHECK(any_contains(p, "not a table effect"));
    CHECK(any_contains(p, "experiment.trials: must be >= 1"));
    CHECK(any_contains(p, "antenna.phi"));
    CHECK(p.size() >= 5);
}

TEST_CASE("topology must be determined")
{
    CHECK_FALSE(problems_of("topology:\n  node_count: 10\n").empty());
    CHECK_FALSE(problems_of("topology:\n  theta: 12\n  lateral_offset: 4\n").empty());
    const auto c = parse_config("topology:\n  lateral_offset: 7.7664\n");
    CHECK(c.build().theta_deg() == doctest::Approx(11.7).epsilon(1e-4));
}

TEST_CASE("traffic density from a vehicle count")
{
    const auto c = parse_config("topology: {theta: 12}\ntraffic:\n  vehicles: 15\n");
    CHECK(c.traffic.density_lambda == doctest::Approx(7.5e-4));
    const auto wide = parse_config("topology: {theta: 12}\ntraffic:\n  vehicles: 15\n  carriageway_width: 30\n");
    CHECK(wide.traffic.density_lambda == doctest::Approx(5e-4));
    CHECK(any_contains(problems_of("topology: {theta: 12}\ntraffic: {vehicles: 5, density: 1e-4}\n"),
                       "not both"));
}

TEST_CASE("building material and gamma are exclusive")
{
    const auto c = parse_config("topology: {theta: 12}\nbuilding: {material: brick}\n");
    CHECK(c.building.reflection_coeff_gamma == 14.8);
    CHECK(any_contains(problems_of("topology: {theta: 12}\nbuilding: {material: brick, gamma: 3}\n"),
                       "not both"));
}

TEST_CASE("sweep grammar")
{
    const auto c = parse_config("topology: {theta: 12}\nexperiment:\n  sweep: {axis: relay_height, values: [2, 3, 4]}\n");
    CHECK(c.experiment.sweep->axis == SweepAxis::RelayHeight);
    CHECK(c.experiment.sweep->range.values == std::vector<double>{2, 3, 4});
    CHECK(any_contains(problems_of("topology: {theta: 12}\nexperiment:\n  sweep: {axis: speed, values: [1]}\n"),
                       "unknown axis"));
    CHECK(any_contains(problems_of("topology: {theta: 12}\nexperiment:\n  sweep: {axis: density, values: [2, 1, 3]}\n"),
                       "strictly monotone"));
    CHECK(any_contains(problems_of("topology: {theta: 12}\nexperiment:\n  sweep: {axis: density, from: 0}\n"),
                       "needs values"));
}
