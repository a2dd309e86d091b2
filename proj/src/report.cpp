// SPDX-License-Identifier: Apache-2.0
#include "iftw/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace iftw {

namespace {

constexpr EffectKind kTableKinds[] = {EffectKind::SideLobeShort, EffectKind::SideLobeLong,
                                      EffectKind::VehicleTypeII, EffectKind::VehicleTypeIII};

std::string fixed(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

std::string format_number(double value)
{
    if (!std::isfinite(value))
        throw std::domain_error("refusing to emit a non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value + 0.0);
    return buf;
}

TableReport run_tables(const ScenarioConfig& config)
{
    const Topology topo = config.build();
    const RadioParams radio = config.calibrated_radio();
    const auto& effects = config.experiment.effects;

    TableReport rep;
    rep.calibrated = config.calibrate_to_sinr.has_value();
    rep.tx_power = radio.tx_power;
    rep.noise_power = noise_power(radio);

    // Every victim link has the same hop length, so one baseline serves all rows.
    const auto reference = EffectScenario::standard(EffectKind::SideLobeShort, topo);
    const LinkReport base = victim_baseline(topo, config.antenna, radio, reference.victim_index);
    rep.baseline_sinr = base.sinr;
    rep.baseline_rate = base.rate;

    for (EffectKind kind : kTableKinds)
    {
        TableRow row;
        row.kind = kind;
        row.enabled = std::find(effects.begin(), effects.end(), kind) != effects.end();
        const auto scenario = EffectScenario::standard(kind, topo);
        row.tx_index = scenario.tx_index;
        row.victim_index = scenario.victim_index;
        row.sinr = rep.baseline_sinr;
        if (row.enabled)
        {
            const EffectOutcome o = evaluate_effect(topo, config.antenna, radio, scenario);
            row.sinr = o.perturbed_sinr;
            row.delta = o.delta;
        }
        rep.total_delta += row.delta;
        rep.rows.push_back(row);
    }

    rep.building = evaluate_building_reflection(topo, config.antenna, radio, config.building);
    const EffectKind side[] = {EffectKind::SideLobeShort, EffectKind::SideLobeLong};
    const EffectKind refl[] = {EffectKind::VehicleTypeII, EffectKind::VehicleTypeIII};
    rep.worst_case_side_lobe = worst_case_reconfigured_delta(topo, config.antenna, radio, side);
    rep.worst_case_reflection = worst_case_reconfigured_delta(topo, config.antenna, radio, refl);
    return rep;
}

std::string format_table_report(const TableReport& r)
{
    std::ostringstream out;
    out << "# SINR under secondary effects\n";
    if (r.calibrated)
        out << "# tx power solved by calibration: " << fixed(r.tx_power, 4) << " dBm\n"
            << "# Absolute SINR values are calibration targets, not predictions: transmit power,\n"
            << "# carrier and bandwidth are free inputs. Only the SINR deltas are model outputs.\n";
    else
        out << "# tx power (configured): " << fixed(r.tx_power, 4) << " dBm\n";
    out << "# noise power: " << fixed(r.noise_power, 4) << " dBm\n\n";

    out << "effect              tx  victim  enabled  SINR [dB]  delta [dB]\n";
    out << "baseline            -   -       -        " << fixed(r.baseline_sinr, 4) << "    "
        << fixed(0.0, 4) << "\n";
    for (const auto& row : r.rows)
    {
        char line[160];
        std::snprintf(line, sizeof line, "%-19s %-3d %-7d %-8s %-10s %s\n",
                      std::string(to_string(row.kind)).c_str(), row.tx_index, row.victim_index,
                      row.enabled ? "yes" : "no", fixed(row.sinr, 4).c_str(), fixed(row.delta, 4).c_str());
        out << line;
    }
    out << "total (sum of deltas)                               " << fixed(r.total_delta, 4) << "\n\n";

    out << "building double reflection: path " << fixed(r.building.path.length, 3) << " m, arrival offset "
        << fixed(r.building.path.rx_offset_deg, 3) << " deg, reduction " << fixed(r.building.reduction, 4)
        << " dB\n";
    out << "worst case vs 25 dB link: side lobes " << fixed(r.worst_case_side_lobe, 4)
        << " dB, vehicle reflections " << fixed(r.worst_case_reflection, 4) << " dB\n";
    return out.str();
}

CheckReport run_check(const ScenarioConfig& config)
{
    const Topology topo = config.build();
    CheckReport rep;
    const double phi = config.antenna.beamwidth_phi;
    rep.interference_free = check_interference_free(topo.theta_deg(), phi);
    rep.clearance_deg = interference_clearance_deg(topo.theta_deg());
    rep.threshold_theta_deg = phi < 60.0 ? min_interference_free_theta(phi) : std::nan("");
    rep.hop_length = topo.hop_length();
    rep.lateral_offset = topo.road_width();
    rep.span = topo.span();
    rep.mitigation = mitigation_tilt(config.mitigation.delta_h, config.mitigation.road_width);
    rep.mitigation_ok = rep.mitigation.eliminates_building_reflection(config.mitigation.phi_deg);
    return rep;
}

std::string format_check_report(const ScenarioConfig& config, const CheckReport& r)
{
    const double phi = config.antenna.beamwidth_phi;
    std::ostringstream out;
    out << "topology: " << config.topology.node_count << " nodes, d0 " << fixed(config.topology.spacing_d0, 3)
        << " m, hop " << fixed(r.hop_length, 3) << " m, lateral offset " << fixed(r.lateral_offset, 3)
        << " m, span " << fixed(r.span, 3) << " m\n";
    out << "interference-free: clearance " << fixed(r.clearance_deg, 4) << " deg vs phi/2 "
        << fixed(phi / 2.0, 4) << " deg -> " << (r.interference_free ? "OK" : "VIOLATED") << "\n";
    if (std::isfinite(r.threshold_theta_deg))
        out << "minimal interference-free theta for phi " << fixed(phi, 3) << " deg: "
            << fixed(r.threshold_theta_deg, 6) << " deg\n";
    out << "mitigation: delta_h " << fixed(r.mitigation.delta_h, 3) << " m over " << fixed(r.mitigation.road_width, 3)
        << " m -> theta1 " << fixed(r.mitigation.theta1_deg, 4) << " deg vs phi/2 "
        << fixed(config.mitigation.phi_deg / 2.0, 4) << " deg -> "
        << (r.mitigation_ok ? "building reflection eliminated" : "not eliminated") << "\n";
    return out.str();
}

void write_probability_csv(std::ostream& out, SweepAxis axis, const std::vector<ProbabilityPoint>& rows)
{
    out << to_string(axis) << ",p_analytic,p_mc,mc_half_width\n";
    for (const auto& r : rows)
        out << format_number(r.x) << ',' << format_number(r.p_analytic) << ',' << format_number(r.p_mc) << ','
            << format_number(r.half_width) << '\n';
}

void write_loss_csv(std::ostream& out, SweepAxis axis, const std::vector<LossPoint>& rows)
{
    out << to_string(axis) << ",sinr_reduction_db,arrival_offset_deg,path_length_m\n";
    for (const auto& r : rows)
        out << format_number(r.x) << ',' << format_number(r.reduction) << ',' << format_number(r.rx_offset_deg)
            << ',' << format_number(r.path_length) << '\n';
}

std::string run_sweep(const ScenarioConfig& config)
{
    if (!config.experiment.sweep)
        throw std::invalid_argument("experiment.sweep: no sweep configured");
    const SweepSpec& spec = *config.experiment.sweep;
    std::ostringstream out;
    if (is_probability_axis(spec.axis))
    {
        McOptions mc;
        mc.trials = config.experiment.trials;
        mc.seed = config.experiment.seed;
        mc.threads = config.experiment.threads;
        const auto rows = sweep_refl_probability(spec.axis, spec.range, config.traffic, config.region(),
                                                 config.topology.node_count, mc);
        write_probability_csv(out, spec.axis, rows);
    }
    else
    {
        const auto rows = sweep_building_loss(spec.axis, spec.range, config.build(), config.antenna,
                                              config.calibrated_radio(), config.building);
        write_loss_csv(out, spec.axis, rows);
    }
    return out.str();
}

ReflectionStats run_mc(const ScenarioConfig& config)
{
    McOptions mc;
    mc.trials = config.experiment.trials;
    mc.seed = config.experiment.seed;
    mc.threads = config.experiment.threads;
    return monte_carlo_reflection(config.traffic, config.region(), config.topology.node_count, mc);
}

std::string format_mc_report(const ScenarioConfig& config, const ReflectionStats& s)
{
    std::ostringstream out;
    out << "reflection probability, N = " << config.topology.node_count << ", density "
        << format_number(config.traffic.density_lambda) << " /m^2, relay height "
        << format_number(config.topology.height_side_a) << " m\n";
    out << "  Lambda_RR (per region)  " << format_number(s.lambda_rr) << "\n";
    out << "  eta (height fraction)   " << format_number(s.eta) << "\n";
    out << "  P_refl (closed form)    " << format_number(s.p_refl) << "\n";
    out << "  P_refl (Monte Carlo)    " << format_number(s.mc.probability) << " +/- "
        << format_number(s.mc.half_width) << " (95%, " << s.trials << " trials, seed " << s.seed << ")\n";
    out << "  vehicle dimensions floored at " << format_number(s.truncation_floor) << " m in the oracle\n";
    return out.str();
}

void write_mc_csv(std::ostream& out, const ReflectionStats& s)
{
    out << "lambda_rr,eta,p_analytic,p_mc,mc_half_width,hits,trials,seed,truncation_floor\n";
    out << format_number(s.lambda_rr) << ',' << format_number(s.eta) << ',' << format_number(s.p_refl) << ','
        << format_number(s.mc.probability) << ',' << format_number(s.mc.half_width) << ',' << s.mc.hits << ','
        << s.trials << ',' << s.seed << ',' << format_number(s.truncation_floor) << '\n';
}

}  // namespace iftw
