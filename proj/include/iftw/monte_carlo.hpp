// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo oracle for the reflection probability.
//
// Each trial places a Poisson number of vehicles uniformly in a bounding
// strip around each of the N-3 reflection regions, draws (w, l, h) from the
// configured normals (floored at `truncation_floor`), and reports a hit when
// any vehicle's centre falls in its footprint with its height in the bounce
// window. Trials are independent and draw from per-(trial, region) streams,
// so the hit count does not depend on thread count or schedule.
#pragma once

#include <cstdint>

#include "iftw/footprint.hpp"
#include "iftw/refl_prob.hpp"

namespace iftw {

struct McEstimate
{
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double probability = 0.0;
    double half_width = 0.0;  // 95% normal approximation
};

McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials);

struct ReflectionStats
{
    double lambda_rr = 0.0;
    double eta = 0.0;
    double p_refl = 0.0;
    McEstimate mc;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double truncation_floor = 0.0;
};

//! Precomputed per-run constants; trial_hits() is the unit of parallel work.
class ReflectionTrialKernel
{
  public:
    static constexpr double kDefaultTruncationFloor = 0.01;  // m

    ReflectionTrialKernel(const VehicleStats& stats, const ReflectionRegionParams& region,
                          int node_count, double truncation_floor = kDefaultTruncationFloor);

    bool trial_hits(std::uint64_t seed, std::uint64_t trial) const;

    int regions() const { return regions_; }
    double strip_length() const { return strip_length_; }
    double expected_vehicles_per_region() const { return mean_count_; }

  private:
    VehicleStats stats_;
    FootprintShape shape_;
    int regions_;
    double strip_length_;
    double mean_count_;
    double height_low_;
    double height_high_;
    double floor_;
};

//! Reference implementation: plain loop over trials.
std::uint64_t count_hits_serial(const ReflectionTrialKernel& kernel, std::uint64_t seed,
                                std::uint64_t trials);

//! OpenMP reduction over trials. threads <= 0 uses the runtime default.
std::uint64_t count_hits_parallel(const ReflectionTrialKernel& kernel, std::uint64_t seed,
                                  std::uint64_t trials, int threads = 0);

struct McOptions
{
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int threads = 0;
    bool parallel = true;
    double truncation_floor = ReflectionTrialKernel::kDefaultTruncationFloor;
};

ReflectionStats monte_carlo_reflection(const VehicleStats& stats, const ReflectionRegionParams& region,
                                       int node_count, const McOptions& options);

}  // namespace iftw
