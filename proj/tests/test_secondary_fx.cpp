// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "iftw/error.hpp"
#include "iftw/secondary_fx.hpp"

using namespace iftw;

namespace {

struct Setup
{
    Topology topo;
    AntennaPattern antenna = baseline_antenna_preset();
    RadioParams radio = radio_preset_60ghz();
};

Setup calibrated(double theta = 11.7, int n = 10)
{
    TopologySpec s;
    s.node_count = n;
    s.spacing_d0 = 75.0;
    s.theta_deg = theta;
    Setup out{build_topology(s)};
    out.radio.tx_power = calibrate_tx_power(out.radio, 23.18, 23.18, out.topo.hop_length(), 41.1808);
    return out;
}

// 10 log10(1 + I/N) with I/N expressed through the signal-to-interference ratio.
double delta_from_sir(double snr_db, double sir_db)
{
    return 10.0 * std::log10(1.0 + std::pow(10.0, (snr_db - sir_db) / 10.0));
}

constexpr double kLog10e = 0.43429448190325176;

}  // namespace

TEST_CASE("standard placements follow the two-slot schedule")
{
    const Setup s = calibrated();
    const auto sh = EffectScenario::standard(EffectKind::SideLobeShort, s.topo);
    const auto lo = EffectScenario::standard(EffectKind::SideLobeLong, s.topo);
    CHECK(sh.victim_index == sh.tx_index - 1);
    CHECK(lo.victim_index == lo.tx_index + 3);
    CHECK(EffectScenario::standard(EffectKind::VehicleTypeIII, s.topo).victim_index == sh.victim_index);
    CHECK(EffectScenario::standard(EffectKind::VehicleTypeII, s.topo).victim_index == lo.victim_index);
    CHECK_NOTHROW(sh.validate(s.topo));
    CHECK_NOTHROW(lo.validate(s.topo));

    EffectScenario bad = lo;
    bad.victim_index = bad.tx_index + 2;  // same slot as the transmitter
    CHECK_THROWS_AS(bad.validate(s.topo), ValidationError);
    bad.victim_index = bad.tx_index + 1;  // intended receiver
    CHECK_THROWS_AS(bad.validate(s.topo), ValidationError);
    bad.victim_index = bad.tx_index + 5;  // long effect expects +3
    CHECK_THROWS_AS(bad.validate(s.topo), ValidationError);
    bad.victim_index = 42;
    CHECK_THROWS_AS(bad.validate(s.topo), ValidationError);

    TopologySpec small;
    small.node_count = 5;
    small.theta_deg = 11.7;
    CHECK_THROWS_AS(EffectScenario::standard(EffectKind::SideLobeLong, build_topology(small)),
                    ValidationError);
}

TEST_CASE("side-lobe deltas under the calibrated preset")
{
    const Setup s = calibrated();
    const double gh = 23.18, gl = 2.0;
    const double hop = s.topo.hop_length();
    const double far = std::hypot(112.5, s.topo.road_width());
    const double alpha_db = 10.0 * kLog10e * 0.0016;

    const double sir_short = 2.0 * (gh - gl);
    const double sir_long = 2.0 * (gh - gl) + 20.0 * std::log10(far / hop) + alpha_db * (far - hop);

    const auto short_out = evaluate_effect(s.topo, s.antenna, s.radio,
                                           EffectScenario::standard(EffectKind::SideLobeShort, s.topo));
    const auto long_out = evaluate_effect(s.topo, s.antenna, s.radio,
                                          EffectScenario::standard(EffectKind::SideLobeLong, s.topo));
    CHECK(short_out.baseline_sinr == doctest::Approx(41.1808).epsilon(1e-12));
    CHECK(short_out.delta == doctest::Approx(delta_from_sir(41.1808, sir_short)).epsilon(1e-10));
    CHECK(long_out.delta == doctest::Approx(delta_from_sir(41.1808, sir_long)).epsilon(1e-10));
    // Frozen from the oracle above.
    CHECK(short_out.delta == doctest::Approx(2.4606).epsilon(1e-4));
    CHECK(long_out.delta == doctest::Approx(0.32631).epsilon(1e-4));
    CHECK(short_out.delta > long_out.delta);
}

TEST_CASE("side-lobe interference limits")
{
    Setup s = calibrated();
    const auto sc = EffectScenario::standard(EffectKind::SideLobeShort, s.topo);

    s.antenna.side_gain = -std::numeric_limits<double>::infinity();
    const auto none = evaluate_effect(s.topo, s.antenna, s.radio, sc);
    CHECK(none.delta == 0.0);
    CHECK(none.perturbed_sinr == none.baseline_sinr);

    // G_l = G_h (kept strictly below so the pattern stays valid): leakage
    // equals a main-lobe link over the same distance.
    s.antenna.side_gain = std::nextafter(s.antenna.main_gain, 0.0);
    const double direct = received_power(s.radio, s.antenna.main_gain, s.antenna.main_gain,
                                         s.topo.distance(sc.tx_index, sc.victim_index));
    CHECK(side_lobe_interference(s.topo, s.antenna, s.radio, sc) == doctest::Approx(direct).epsilon(1e-12));

    EffectScenario wrong = sc;
    wrong.kind = EffectKind::VehicleTypeII;
    CHECK_THROWS_AS(side_lobe_interference(s.topo, s.antenna, s.radio, wrong), ValidationError);
}

TEST_CASE("vehicle reflections")
{
    const Setup s = calibrated();
    const auto t2 = EffectScenario::standard(EffectKind::VehicleTypeII, s.topo);
    const auto t3 = EffectScenario::standard(EffectKind::VehicleTypeIII, s.topo);
    const auto lo = EffectScenario::standard(EffectKind::SideLobeLong, s.topo);
    const auto sh = EffectScenario::standard(EffectKind::SideLobeShort, s.topo);

    // Flat roofs keep the planar path, metal loses 0 dB.
    CHECK(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t2)
          == doctest::Approx(side_lobe_interference(s.topo, s.antenna, s.radio, lo)).epsilon(1e-12));
    CHECK(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t3)
          == doctest::Approx(side_lobe_interference(s.topo, s.antenna, s.radio, sh)).epsilon(1e-12));
    CHECK(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t3, 3.0)
          == doctest::Approx(side_lobe_interference(s.topo, s.antenna, s.radio, sh) - 3.0).epsilon(1e-12));

    CHECK(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t2, INFINITY) == -INFINITY);
    EffectScenario absorbed = t3;
    absorbed.reflection_loss_gamma = INFINITY;
    CHECK(evaluate_effect(s.topo, s.antenna, s.radio, absorbed).delta == 0.0);

    EffectScenario t1 = t2;
    t1.kind = EffectKind::VehicleTypeI;
    CHECK_THROWS_WITH_AS(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t1),
                         doctest::Contains("constructive"), ValidationError);
    CHECK_THROWS_AS(vehicle_reflection_interference(s.topo, s.antenna, s.radio, t2, -1.0), ValidationError);
}

TEST_CASE("delta is nonnegative and nonincreasing in loss and path length")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> theta(8.0, 40.0), gamma(0.0, 30.0), extra(0.0, 200.0);
    const EffectKind kinds[] = {EffectKind::SideLobeShort, EffectKind::SideLobeLong, EffectKind::VehicleTypeII,
                                EffectKind::VehicleTypeIII};
    for (int i = 0; i < 1000; ++i)
    {
        const Setup s = calibrated(theta(rng));
        auto sc = EffectScenario::standard(kinds[i % 4], s.topo);
        sc.reflection_loss_gamma = gamma(rng);
        sc.extra_path = extra(rng);
        const double d0 = evaluate_effect(s.topo, s.antenna, s.radio, sc).delta;
        CHECK(d0 >= 0.0);

        auto more_loss = sc;
        more_loss.reflection_loss_gamma += 1.0;
        CHECK(evaluate_effect(s.topo, s.antenna, s.radio, more_loss).delta <= d0);
        auto longer = sc;
        longer.extra_path += 5.0;
        CHECK(evaluate_effect(s.topo, s.antenna, s.radio, longer).delta <= d0);
    }
}

TEST_CASE("simultaneous effects compose in the power domain")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> theta(8.0, 40.0), snr(0.0, 45.0);
    const EffectKind kinds[] = {EffectKind::SideLobeShort, EffectKind::SideLobeLong, EffectKind::VehicleTypeII,
                                EffectKind::VehicleTypeIII};
    for (int i = 0; i < 1000; ++i)
    {
        const Setup s = calibrated(theta(rng));
        const EffectKind a = kinds[i % 4], b = kinds[(i / 4) % 4];
        const double base = snr(rng);
        const double da = worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, std::span(&a, 1), base);
        const double db = worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, std::span(&b, 1), base);
        const EffectKind both[] = {a, b};
        const double dab = worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, both, base);
        CHECK(dab <= da + db + 1e-12);
        CHECK(dab >= std::max(da, db) - 1e-12);
    }
}

TEST_CASE("worst case against a 25 dB link")
{
    const Setup s = calibrated();
    CHECK(worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, {}) == 0.0);

    // Delta depends on I/N only: sum both leakage powers relative to noise.
    const double noise = noise_power(s.radio);
    const double i_short = side_lobe_interference(s.topo, s.antenna, s.radio,
                                                  EffectScenario::standard(EffectKind::SideLobeShort, s.topo));
    const double i_long = side_lobe_interference(s.topo, s.antenna, s.radio,
                                                 EffectScenario::standard(EffectKind::SideLobeLong, s.topo));
    const double expected = 10.0 * std::log10(1.0 + std::pow(10.0, (i_short - noise) / 10.0)
                                              + std::pow(10.0, (i_long - noise) / 10.0));
    const EffectKind both[] = {EffectKind::SideLobeShort, EffectKind::SideLobeLong};
    CHECK(worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, both) == doctest::Approx(expected).epsilon(1e-10));

    const EffectKind building[] = {EffectKind::BuildingDouble};
    CHECK_THROWS_AS(worst_case_reconfigured_delta(s.topo, s.antenna, s.radio, building), ValidationError);
}

TEST_CASE("building double reflection: unfolded geometry")
{
    const Setup s = calibrated();
    const double w = s.topo.road_width();
    for (double d1 : {1.0, 4.0, 7.0, 12.0})
    {
        const BuildingPath p = building_reflection_path(s.topo, 2, 5, BuildingConfig{d1, 8.0, 2});
        // Legs: 0 -> w+d1 -> -d1 -> w across the road, 112.5 m along it.
        const double lateral = (w + d1) + (w + 2 * d1) + (w + d1);
        CHECK(p.lateral_travel == doctest::Approx(lateral).epsilon(1e-12));
        CHECK(p.length == doctest::Approx(std::hypot(112.5, lateral)).epsilon(1e-12));
        const double slope = std::atan(lateral / 112.5) * 180.0 / std::numbers::pi;
        CHECK(p.tx_offset_deg == doctest::Approx(slope - 11.7).epsilon(1e-10));
        CHECK(p.rx_offset_deg == doctest::Approx(slope - 11.7).epsilon(1e-10));
    }
    // One bounce off the facade behind the victim's row.
    const BuildingPath one = building_reflection_path(s.topo, 2, 5, BuildingConfig{4.0, 8.0, 1});
    CHECK(one.lateral_travel == doctest::Approx((w + 4.0) + 4.0).epsilon(1e-12));
}

TEST_CASE("building double reflection: SINR reduction")
{
    const Setup s = calibrated();
    const BuildingConfig glass{4.0, material::kGlass, 2};
    const BuildingOutcome o = evaluate_building_reflection(s.topo, s.antenna, s.radio, glass);
    // Arrives 7.555 deg off boresight, just outside phi/2: side-lobe reception.
    CHECK(o.path.rx_offset_deg > 7.5);
    CHECK(o.rx_gain == 2.0);
    CHECK(o.tx_gain == 23.18);

    const double hop = s.topo.hop_length();
    const double sir = (23.18 - 2.0) + 20.0 * std::log10(o.path.length / hop)
                       + 10.0 * kLog10e * 0.0016 * (o.path.length - hop) + 2 * 8.0;
    CHECK(o.reduction == doctest::Approx(delta_from_sir(41.1808, sir)).epsilon(1e-10));
    CHECK(o.reduction == doctest::Approx(0.89188).epsilon(1e-4));

    // Close enough that the bounce lands in the receive beam.
    const BuildingOutcome near = evaluate_building_reflection(s.topo, s.antenna, s.radio, {3.0, 8.0, 2});
    CHECK(near.rx_gain == 23.18);
    CHECK(near.reduction > 10.0);

    CHECK(building_reflection_loss(s.topo, s.antenna, s.radio, {4.0, INFINITY, 2}) == 0.0);
    CHECK_THROWS_AS(building_reflection_loss(s.topo, s.antenna, s.radio, {0.0, 8.0, 2}), ValidationError);
    CHECK_THROWS_AS(building_reflection_loss(s.topo, s.antenna, s.radio, {4.0, 8.0, 0}), ValidationError);
}

TEST_CASE("building reduction is monotone in gamma and setback")
{
    const Setup s = calibrated();
    double prev = INFINITY;
    for (double g = 0.0; g <= 30.0; g += 0.25)
    {
        const double r = building_reflection_loss(s.topo, s.antenna, s.radio, {4.0, g, 2});
        CHECK(r >= 0.0);
        CHECK(r <= prev);
        prev = r;
    }
    prev = INFINITY;
    for (double d1 = 0.5; d1 <= 20.0; d1 += 0.1)
    {
        const double r = building_reflection_loss(s.topo, s.antenna, s.radio, {d1, 7.0, 2});
        CHECK(r <= prev);
        prev = r;
    }
}

TEST_CASE("material presets and names")
{
    CHECK(material_gamma("concrete") == 7.5);
    CHECK(material_gamma("brick") == 14.8);
    CHECK(material_gamma("glass") == 8.0);
    CHECK(material_gamma("metal") == 0.0);
    CHECK_FALSE(material_gamma("wood").has_value());
    CHECK(effect_kind_from_string("vehicle_type_iii") == EffectKind::VehicleTypeIII);
    CHECK_FALSE(effect_kind_from_string("nope").has_value());
}
