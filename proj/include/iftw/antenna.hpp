// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iftw/geometry.hpp"

namespace iftw {

//! Flat-top pattern: main_gain inside the beam (offset <= phi/2), a constant
//! side-lobe floor everywhere else. Gains in dBi; side_gain may be -inf.
struct AntennaPattern
{
    double beamwidth_phi = 15.0;  // deg
    double main_gain = 23.18;     // dBi
    double side_gain = 2.0;       // dBi

    void validate() const;
};

//! 61-element hexagonal array at ~15 deg beamwidth, side lobes taken at
//! their 2 dBi upper bound.
inline AntennaPattern baseline_antenna_preset() { return {15.0, 23.18, 2.0}; }

//! Gain (dBi) at an absolute offset from boresight in [0, 180] degrees.
double gain_at(const AntennaPattern& pattern, double offset_deg);

//! Planar angle (deg, in [0, 180]) between tx->boresight_target and
//! tx->victim. Throws GeometryError if either vector is degenerate.
double offset_between(Vec2 tx, Vec2 boresight_target, Vec2 victim);

double offset_between(const Topology& topology, int tx_index, int boresight_target_index,
                      int victim_index);

}  // namespace iftw
