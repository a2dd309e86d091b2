// SPDX-License-Identifier: Apache-2.0
//
// Secondary interference in the triangular-wave path: side-lobe leakage,
// vehicle-roof reflections and two-bounce building reflections. Each effect
// is reduced to an interference power at a victim receiver and compared with
// the victim's unperturbed link.
//
// Scheduling is two-slot: when node i transmits to i+1, every node of the
// same parity as i+1 is receiving. A victim therefore sits an odd number of
// hops from the interfering transmitter.
#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "iftw/antenna.hpp"
#include "iftw/geometry.hpp"
#include "iftw/link_budget.hpp"

namespace iftw {

enum class EffectKind
{
    SideLobeShort,   // tx N_{k-1} -> victim N_{k-2}
    SideLobeLong,    // tx N_{k-1} -> victim N_{k+2}
    VehicleTypeI,    // constructive multipath at the intended receiver; never interference
    VehicleTypeII,   // roof bounce, tx N_{k-1} -> victim N_{k+2}
    VehicleTypeIII,  // roof bounce, tx N_{k-1} -> victim N_{k-2}
    BuildingDouble,  // two facade bounces, tx N_{k-1} -> victim N_{k+2}
};

std::string_view to_string(EffectKind kind);
std::optional<EffectKind> effect_kind_from_string(std::string_view name);

struct EffectScenario
{
    EffectKind kind = EffectKind::SideLobeShort;
    int tx_index = 0;
    int victim_index = 0;
    double reflection_loss_gamma = 0.0;  // dB
    double extra_path = 0.0;             // m

    //! Canonical placement: tx = node 2, victim one hop behind or three
    //! hops ahead depending on the kind. Needs at least 6 nodes.
    static EffectScenario standard(EffectKind kind, const Topology& topology);

    void validate(const Topology& topology) const;
};

struct BuildingConfig
{
    double setback_d1 = 4.0;             // m, lamppost line to facade
    double reflection_coeff_gamma = 8.0; // dB per bounce
    int bounces = 2;

    void validate() const;
};

namespace material {
inline constexpr double kMetal = 0.0;
inline constexpr double kConcrete = 7.5;
inline constexpr double kGlass = 8.0;
inline constexpr double kBrick = 14.8;
}  // namespace material

std::optional<double> material_gamma(std::string_view name);

//! Unperturbed SINR/SNR at `victim`, served by victim-1 with main lobes.
LinkReport victim_baseline(const Topology& topology, const AntennaPattern& antenna,
                           const RadioParams& radio, int victim_index);

//! Interference (dBm) over the straight tx->victim path. Gains follow each
//! end's offset from its own boresight, which is the side-lobe floor at both
//! ends in any interference-free layout.
double side_lobe_interference(const Topology& topology, const AntennaPattern& antenna,
                              const RadioParams& radio, const EffectScenario& scenario);

//! Type II/III roof bounce. Flat roofs keep the planar direction, so the path
//! length is the straight separation (plus scenario.extra_path) and the body
//! reflection loss `metal_loss` (dB) is subtracted. Type I is rejected.
double vehicle_reflection_interference(const Topology& topology, const AntennaPattern& antenna,
                                       const RadioParams& radio, const EffectScenario& scenario,
                                       double metal_loss = material::kMetal);

//! Unfolded mirror-image path between two nodes via alternating facades.
struct BuildingPath
{
    double length = 0.0;          // m
    double lateral_travel = 0.0;  // m, total across-road distance travelled
    double tx_offset_deg = 0.0;   // departure angle from tx boresight
    double rx_offset_deg = 0.0;   // arrival angle from victim boresight
};

BuildingPath building_reflection_path(const Topology& topology, int tx_index, int victim_index,
                                      const BuildingConfig& building);

struct BuildingOutcome
{
    BuildingPath path;
    double tx_gain = 0.0;
    double rx_gain = 0.0;
    double interference = 0.0;    // dBm
    double baseline_sinr = 0.0;   // dB
    double perturbed_sinr = 0.0;  // dB
    double reduction = 0.0;       // dB
};

BuildingOutcome evaluate_building_reflection(const Topology& topology, const AntennaPattern& antenna,
                                             const RadioParams& radio, const BuildingConfig& building);

//! SINR reduction (dB) at N_{k+2} from the two-bounce facade path of N_{k-1}.
double building_reflection_loss(const Topology& topology, const AntennaPattern& antenna,
                                const RadioParams& radio, const BuildingConfig& building);

//! Interference power (dBm) of any non-building, non-Type-I effect.
double effect_interference(const Topology& topology, const AntennaPattern& antenna,
                           const RadioParams& radio, const EffectScenario& scenario);

struct EffectOutcome
{
    EffectScenario scenario;
    double interference = 0.0;    // dBm
    double baseline_sinr = 0.0;   // dB
    double perturbed_sinr = 0.0;  // dB
    double delta = 0.0;           // dB, baseline - perturbed
};

EffectOutcome evaluate_effect(const Topology& topology, const AntennaPattern& antenna,
                              const RadioParams& radio, const EffectScenario& scenario);

//! Reconfigured-link worst case: the victim's own signal sits at
//! `baseline_snr` dB while the interference of every listed effect (standard
//! placement) lands on it at once. Returns the SINR reduction in dB.
double worst_case_reconfigured_delta(const Topology& topology, const AntennaPattern& antenna,
                                     const RadioParams& radio, std::span<const EffectKind> effects,
                                     double baseline_snr = 25.0);

}  // namespace iftw
