// SPDX-License-Identifier: Apache-2.0
#include "iftw/antenna.hpp"

#include <cmath>
#include <string>

#include "iftw/error.hpp"
#include "iftw/units.hpp"

namespace iftw {

void AntennaPattern::validate() const
{
    if (!(beamwidth_phi > 0.0 && beamwidth_phi < 180.0))
        throw ValidationError("antenna.phi", "beamwidth must lie in (0, 180) degrees");
    if (!std::isfinite(main_gain))
        throw ValidationError("antenna.main_gain", "must be finite");
    if (std::isnan(side_gain) || side_gain == INFINITY)
        throw ValidationError("antenna.side_gain", "must be finite or -inf");
    if (!(main_gain > side_gain))
        throw ValidationError("antenna.side_gain", "main-lobe gain must exceed side-lobe gain");
}

double gain_at(const AntennaPattern& pattern, double offset_deg)
{
    if (!(offset_deg >= 0.0 && offset_deg <= 180.0))
        throw ValidationError("offset_angle", "must lie in [0, 180] degrees, got "
                                                  + std::to_string(offset_deg));
    return offset_deg <= pattern.beamwidth_phi / 2.0 ? pattern.main_gain : pattern.side_gain;
}

double offset_between(Vec2 tx, Vec2 boresight_target, Vec2 victim)
{
    const Vec2 a = boresight_target - tx;
    const Vec2 b = victim - tx;
    if ((a.x == 0.0 && a.y == 0.0) || (b.x == 0.0 && b.y == 0.0))
        throw GeometryError("offset_between: coincident node positions");
    const double cross = a.x * b.y - a.y * b.x;
    const double dot = a.x * b.x + a.y * b.y;
    return rad_to_deg(std::abs(std::atan2(cross, dot)));
}

double offset_between(const Topology& topology, int tx_index, int boresight_target_index,
                      int victim_index)
{
    if (tx_index == boresight_target_index || tx_index == victim_index
        || boresight_target_index == victim_index)
        throw ValidationError("node_index", "tx, boresight target and victim must be distinct");
    return offset_between(topology.node(tx_index).planar(),
                          topology.node(boresight_target_index).planar(),
                          topology.node(victim_index).planar());
}

}  // namespace iftw
