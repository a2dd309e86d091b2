// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration: SINR tables, parameter sweeps and the CSV /
// text renderings the CLI emits.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "iftw/config.hpp"
#include "iftw/monte_carlo.hpp"
#include "iftw/sweep.hpp"

namespace iftw {

struct TableRow
{
    EffectKind kind = EffectKind::SideLobeShort;
    bool enabled = false;
    int tx_index = 0;
    int victim_index = 0;
    double sinr = 0.0;   // dB
    double delta = 0.0;  // dB
};

struct TableReport
{
    bool calibrated = false;
    double tx_power = 0.0;       // dBm, solved or configured
    double baseline_sinr = 0.0;  // dB
    double baseline_rate = 0.0;  // bit/s
    double noise_power = 0.0;    // dBm
    std::vector<TableRow> rows;
    double total_delta = 0.0;    // sum of the per-effect deltas
    BuildingOutcome building;
    double worst_case_side_lobe = 0.0;   // dB vs 25 dB baseline
    double worst_case_reflection = 0.0;  // dB vs 25 dB baseline
};

TableReport run_tables(const ScenarioConfig& config);
std::string format_table_report(const TableReport& report);

//! Geometry / interference-free summary for the `check` subcommand.
struct CheckReport
{
    bool interference_free = false;
    double clearance_deg = 0.0;
    double threshold_theta_deg = 0.0;  // NaN if phi >= 60
    double hop_length = 0.0;
    double lateral_offset = 0.0;
    double span = 0.0;
    MitigationGeometry mitigation;
    bool mitigation_ok = false;
};

CheckReport run_check(const ScenarioConfig& config);
std::string format_check_report(const ScenarioConfig& config, const CheckReport& report);

//! Formats a finite number with 9 significant digits, '.' decimal point.
//! Throws std::domain_error for NaN or infinity.
std::string format_number(double value);

void write_probability_csv(std::ostream& out, SweepAxis axis, const std::vector<ProbabilityPoint>& rows);
void write_loss_csv(std::ostream& out, SweepAxis axis, const std::vector<LossPoint>& rows);

//! Runs the configured sweep and returns the CSV text.
std::string run_sweep(const ScenarioConfig& config);

//! Single oracle evaluation at the configured density / height.
ReflectionStats run_mc(const ScenarioConfig& config);
std::string format_mc_report(const ScenarioConfig& config, const ReflectionStats& stats);
void write_mc_csv(std::ostream& out, const ReflectionStats& stats);

}  // namespace iftw
