// SPDX-License-Identifier: Apache-2.0
#include "iftw/secondary_fx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "iftw/error.hpp"
#include "iftw/units.hpp"

namespace iftw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_short_kind(EffectKind k)
{
    return k == EffectKind::SideLobeShort || k == EffectKind::VehicleTypeIII;
}

bool is_side_lobe(EffectKind k)
{
    return k == EffectKind::SideLobeShort || k == EffectKind::SideLobeLong;
}

bool is_vehicle(EffectKind k)
{
    return k == EffectKind::VehicleTypeII || k == EffectKind::VehicleTypeIII;
}

void reject_type_one(EffectKind k)
{
    if (k == EffectKind::VehicleTypeI)
        throw ValidationError("effect.kind",
                              "Type I reflections add a constructive path at the intended receiver "
                              "and are not interference; they are not modelled");
}

// Gain pair of the tx->victim direct geometry, each end against its own boresight.
std::pair<double, double> direct_gains(const Topology& topology, const AntennaPattern& antenna,
                                       int tx, int victim)
{
    const double tx_off = offset_between(topology, tx, tx + 1, victim);
    const double rx_off = offset_between(topology, victim, victim - 1, tx);
    return {gain_at(antenna, tx_off), gain_at(antenna, rx_off)};
}

double facade_y(Side behind, const Topology& topology, double setback)
{
    return behind == Side::A ? -setback : topology.road_width() + setback;
}

Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

}  // namespace

std::string_view to_string(EffectKind kind)
{
    switch (kind)
    {
        case EffectKind::SideLobeShort: return "side_lobe_short";
        case EffectKind::SideLobeLong: return "side_lobe_long";
        case EffectKind::VehicleTypeI: return "vehicle_type_i";
        case EffectKind::VehicleTypeII: return "vehicle_type_ii";
        case EffectKind::VehicleTypeIII: return "vehicle_type_iii";
        case EffectKind::BuildingDouble: return "building_double";
    }
    return "unknown";
}

std::optional<EffectKind> effect_kind_from_string(std::string_view name)
{
    for (auto k : {EffectKind::SideLobeShort, EffectKind::SideLobeLong, EffectKind::VehicleTypeI,
                   EffectKind::VehicleTypeII, EffectKind::VehicleTypeIII, EffectKind::BuildingDouble})
    {
        if (to_string(k) == name)
            return k;
    }
    return std::nullopt;
}

std::optional<double> material_gamma(std::string_view name)
{
    if (name == "metal") return material::kMetal;
    if (name == "concrete") return material::kConcrete;
    if (name == "glass") return material::kGlass;
    if (name == "brick") return material::kBrick;
    return std::nullopt;
}

EffectScenario EffectScenario::standard(EffectKind kind, const Topology& topology)
{
    if (topology.node_count() < 6)
        throw ValidationError("topology.node_count",
                              "secondary-effect evaluation needs at least 6 nodes");
    constexpr int tx = 2;
    const int victim = is_short_kind(kind) ? tx - 1 : tx + 3;
    return {kind, tx, victim, 0.0, 0.0};
}

void EffectScenario::validate(const Topology& topology) const
{
    const int n = topology.node_count();
    auto in_range = [n](int i) { return i >= 0 && i < n; };
    if (!in_range(tx_index) || !in_range(tx_index + 1))
        throw ValidationError("effect.tx_index", "transmitter and its receiver must exist");
    if (!in_range(victim_index) || victim_index < 1)
        throw ValidationError("effect.victim_index", "victim and its upstream node must exist");
    if (!(reflection_loss_gamma >= 0.0))
        throw ValidationError("effect.reflection_loss_gamma", "must be >= 0");
    if (!(extra_path >= 0.0))
        throw ValidationError("effect.extra_path", "must be >= 0");
    const int hops = victim_index - tx_index;
    if (hops % 2 == 0)
        throw ValidationError("effect.victim_index",
                              "victim must receive in the interferer's transmit slot (odd hop distance)");
    if (hops == 1)
        throw ValidationError("effect.victim_index", "victim is the interferer's intended receiver");
    const int expected = is_short_kind(kind) ? -1 : 3;
    if ((is_side_lobe(kind) || is_vehicle(kind)) && hops != expected)
        throw ValidationError("effect.victim_index",
                              std::string(to_string(kind)) + " expects victim at tx "
                                  + (expected > 0 ? "+3" : "-1"));
}

void BuildingConfig::validate() const
{
    if (!(setback_d1 > 0.0))
        throw ValidationError("building.setback_d1", "must be > 0");
    if (!(reflection_coeff_gamma >= 0.0))
        throw ValidationError("building.gamma", "must be >= 0");
    if (bounces < 1)
        throw ValidationError("building.bounces", "must be >= 1");
}

LinkReport victim_baseline(const Topology& topology, const AntennaPattern& antenna,
                           const RadioParams& radio, int victim_index)
{
    if (victim_index < 1 || victim_index >= topology.node_count())
        throw ValidationError("effect.victim_index", "victim and its upstream node must exist");
    const double rx = received_power(radio, antenna.main_gain, antenna.main_gain,
                                     topology.distance(victim_index - 1, victim_index));
    return make_link_report(radio, rx);
}

double side_lobe_interference(const Topology& topology, const AntennaPattern& antenna,
                              const RadioParams& radio, const EffectScenario& scenario)
{
    if (!is_side_lobe(scenario.kind))
        throw ValidationError("effect.kind", "side_lobe_interference needs a side-lobe kind");
    scenario.validate(topology);
    const auto [g_tx, g_rx] = direct_gains(topology, antenna, scenario.tx_index, scenario.victim_index);
    return received_power(radio, g_tx, g_rx,
                          topology.distance(scenario.tx_index, scenario.victim_index));
}

double vehicle_reflection_interference(const Topology& topology, const AntennaPattern& antenna,
                                       const RadioParams& radio, const EffectScenario& scenario,
                                       double metal_loss)
{
    reject_type_one(scenario.kind);
    if (!is_vehicle(scenario.kind))
        throw ValidationError("effect.kind", "vehicle_reflection_interference needs Type II or III");
    if (!(metal_loss >= 0.0))
        throw ValidationError("metal_loss", "must be >= 0");
    scenario.validate(topology);
    const auto [g_tx, g_rx] = direct_gains(topology, antenna, scenario.tx_index, scenario.victim_index);
    const double path = topology.distance(scenario.tx_index, scenario.victim_index) + scenario.extra_path;
    if (metal_loss == INFINITY)
        return kNegInf;
    return received_power(radio, g_tx, g_rx, path) - metal_loss;
}

BuildingPath building_reflection_path(const Topology& topology, int tx_index, int victim_index,
                                      const BuildingConfig& building)
{
    building.validate();
    const Node& tx = topology.node(tx_index);
    const Node& rx = topology.node(victim_index);
    if (tx_index + 1 >= topology.node_count() || victim_index < 1)
        throw ValidationError("effect.victim_index", "boresight neighbours must exist");

    // Legs alternate between the facade behind the far row and the one behind
    // the near row, starting with the one across the road from the tx.
    double y = tx.y;
    double lateral = 0.0;
    Side facade = other(tx.side);
    double last_facade = 0.0;
    for (int b = 0; b < building.bounces; ++b)
    {
        last_facade = facade_y(facade, topology, building.setback_d1);
        lateral += std::abs(last_facade - y);
        y = last_facade;
        facade = other(facade);
    }
    lateral += std::abs(rx.y - y);

    const double along = rx.x - tx.x;
    if (along == 0.0 && lateral == 0.0)
        throw GeometryError("building_reflection_path: coincident endpoints");

    BuildingPath path;
    path.lateral_travel = lateral;
    path.length = std::hypot(along, lateral);

    const double first_facade = facade_y(other(tx.side), topology, building.setback_d1);
    const double dir_x = along >= 0.0 ? 1.0 : -1.0;
    const Vec2 depart{dir_x * std::abs(along), (first_facade > tx.y ? 1.0 : -1.0) * lateral};
    const Vec2 arrive_back{-dir_x * std::abs(along), (last_facade > rx.y ? 1.0 : -1.0) * lateral};

    const Vec2 origin{0.0, 0.0};
    const Vec2 tx_bore = topology.node(tx_index + 1).planar() - tx.planar();
    const Vec2 rx_bore = topology.node(victim_index - 1).planar() - rx.planar();
    path.tx_offset_deg = offset_between(origin, tx_bore, depart);
    path.rx_offset_deg = offset_between(origin, rx_bore, arrive_back);
    return path;
}

BuildingOutcome evaluate_building_reflection(const Topology& topology, const AntennaPattern& antenna,
                                             const RadioParams& radio, const BuildingConfig& building)
{
    const EffectScenario placement = EffectScenario::standard(EffectKind::BuildingDouble, topology);
    BuildingOutcome out;
    out.path = building_reflection_path(topology, placement.tx_index, placement.victim_index, building);
    // Worst case: the bounce path leaves inside the transmitter's main beam.
    out.tx_gain = antenna.main_gain;
    out.rx_gain = gain_at(antenna, out.path.rx_offset_deg);
    if (building.reflection_coeff_gamma == INFINITY)
        out.interference = kNegInf;
    else
        out.interference = received_power(radio, out.tx_gain, out.rx_gain, out.path.length)
                           - building.bounces * building.reflection_coeff_gamma;
    const LinkReport base = victim_baseline(topology, antenna, radio, placement.victim_index);
    out.baseline_sinr = base.sinr;
    out.perturbed_sinr = sinr(base.rx_power, base.noise_power, out.interference);
    out.reduction = out.baseline_sinr - out.perturbed_sinr;
    return out;
}

double building_reflection_loss(const Topology& topology, const AntennaPattern& antenna,
                                const RadioParams& radio, const BuildingConfig& building)
{
    return evaluate_building_reflection(topology, antenna, radio, building).reduction;
}

double effect_interference(const Topology& topology, const AntennaPattern& antenna,
                           const RadioParams& radio, const EffectScenario& scenario)
{
    reject_type_one(scenario.kind);
    if (is_side_lobe(scenario.kind))
    {
        const double i = side_lobe_interference(topology, antenna, radio, scenario);
        return i - scenario.reflection_loss_gamma;
    }
    if (is_vehicle(scenario.kind))
        return vehicle_reflection_interference(topology, antenna, radio, scenario,
                                               scenario.reflection_loss_gamma);
    throw ValidationError("effect.kind", "building reflections are evaluated with BuildingConfig");
}

EffectOutcome evaluate_effect(const Topology& topology, const AntennaPattern& antenna,
                              const RadioParams& radio, const EffectScenario& scenario)
{
    EffectOutcome out;
    out.scenario = scenario;
    out.interference = effect_interference(topology, antenna, radio, scenario);
    const LinkReport base = victim_baseline(topology, antenna, radio, scenario.victim_index);
    out.baseline_sinr = base.sinr;
    out.perturbed_sinr = sinr(base.rx_power, base.noise_power, out.interference);
    out.delta = out.baseline_sinr - out.perturbed_sinr;
    return out;
}

double worst_case_reconfigured_delta(const Topology& topology, const AntennaPattern& antenna,
                                     const RadioParams& radio, std::span<const EffectKind> effects,
                                     double baseline_snr)
{
    if (effects.empty())
        return 0.0;
    const double noise = noise_power(radio);
    double interference_mw = 0.0;
    for (EffectKind kind : effects)
    {
        const auto scenario = EffectScenario::standard(kind, topology);
        interference_mw += db_to_linear(effect_interference(topology, antenna, radio, scenario));
    }
    const double signal = noise + baseline_snr;
    const double perturbed = interference_mw > 0.0
                                 ? sinr(signal, noise, linear_to_db(interference_mw))
                                 : sinr(signal, noise);
    return baseline_snr - perturbed;
}

}  // namespace iftw
