// SPDX-License-Identifier: Apache-2.0
//
// Triangular-wave relay layout along a straight road.
//
// Nodes sit on lampposts on both sides of the road and alternate sides
// A, B, A, ... Node 0 is at x = 0 on side A and traffic flows towards +x.
// Side A is the line y = 0, side B the line y = lateral_offset. Consecutive
// nodes are d0/2 apart along the road, so same-side neighbours are d0 apart.
// All public angles are in degrees.
#pragma once

#include <optional>
#include <span>
#include <vector>

namespace iftw {

enum class Side { A, B };

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

struct Node
{
    double x = 0.0;  // along the road, m
    Side side = Side::A;
    double y = 0.0;  // across the road, m
    double z = 0.0;  // mounting height, m

    Vec2 planar() const { return {x, y}; }
};

//! Input to build_topology. Supply exactly one of theta_deg / lateral_offset.
struct TopologySpec
{
    int node_count = 10;
    double spacing_d0 = 75.0;
    std::optional<double> theta_deg;
    std::optional<double> lateral_offset;
    double height_side_a = 3.5;
    double height_side_b = 3.5;
};

class Topology
{
  public:
    int node_count() const { return static_cast<int>(nodes_.size()); }
    double spacing_d0() const { return spacing_d0_; }
    double theta_deg() const { return theta_deg_; }
    //! Lateral offset between the two lamppost rows.
    double road_width() const { return road_width_; }
    double height_side_a() const { return height_a_; }
    double height_side_b() const { return height_b_; }
    std::span<const Node> nodes() const { return nodes_; }
    const Node& node(int i) const;

    //! Horizontal length of one hop, (d0/2) / cos(theta).
    double hop_length() const;
    //! Distance along the road from the first to the last node.
    double span() const;
    bool fits_on_road(double road_length) const { return span() <= road_length; }
    //! Theta recovered from the stored coordinates of nodes 0 and 1.
    double derived_theta_deg() const;
    //! Planar distance between two nodes.
    double distance(int i, int j) const;

  private:
    friend Topology build_topology(const TopologySpec& spec);
    Topology() = default;

    std::vector<Node> nodes_;
    double spacing_d0_ = 0.0;
    double theta_deg_ = 0.0;
    double road_width_ = 0.0;
    double height_a_ = 0.0;
    double height_b_ = 0.0;
};

Topology build_topology(const TopologySpec& spec);

//! Self-interference elimination condition:
//! theta - atan(tan(theta) / 3) > phi / 2 (strict).
bool check_interference_free(double theta_deg, double phi_deg);

//! Clearance theta - atan(tan(theta)/3) in degrees. Rises on (0, 60] to its
//! maximum of 30 deg at theta = 60 deg, then falls back to 0 at 90 deg.
double interference_clearance_deg(double theta_deg);

//! Smallest theta (deg) in (0, 60] for which check_interference_free holds,
//! found by bisection to `tol_deg`. Requires 0 < phi < 60.
double min_interference_free_theta(double phi_deg, double tol_deg = 1e-9);

//! Downward tilt of the cross-road ray after lowering one roadside by delta_h.
struct MitigationGeometry
{
    double delta_h = 0.0;
    double road_width = 0.0;
    double theta1_deg = 0.0;

    //! True when theta1 <= phi/2, allowing the angular slack that a height
    //! error of `height_tolerance` metres produces across the road.
    bool eliminates_building_reflection(double phi_deg, double height_tolerance = 0.01) const;
    //! phi/2 - theta1 in degrees (negative when the exact test fails).
    double margin_deg(double phi_deg) const { return phi_deg / 2.0 - theta1_deg; }
};

MitigationGeometry mitigation_tilt(double delta_h, double road_width);

}  // namespace iftw
