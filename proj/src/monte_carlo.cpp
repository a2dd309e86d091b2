// SPDX-License-Identifier: Apache-2.0
#include "iftw/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <omp.h>

#include "iftw/error.hpp"
#include "iftw/rng.hpp"

namespace iftw {

McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials)
{
    McEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.probability = static_cast<double>(hits) / static_cast<double>(trials);
    e.half_width = 1.96 * std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trials));
    return e;
}

ReflectionTrialKernel::ReflectionTrialKernel(const VehicleStats& stats,
                                             const ReflectionRegionParams& region, int node_count,
                                             double truncation_floor)
    : stats_(stats), shape_(region), regions_(node_count - 3), floor_(truncation_floor)
{
    stats.validate();
    region.validate();
    if (node_count < 3)
        throw ValidationError("node_count", "reflection oracle needs N >= 3");
    if (!(truncation_floor >= 0.0))
        throw ValidationError("truncation_floor", "must be >= 0");

    // Longest footprint side: l reaches mu + 12 sd with negligible
    // probability; the width term adds at most tan(t-g) tan^2(t) * 2 / D.
    const double max_width_term = shape_.tan_tilt * shape_.tan_theta * shape_.tan_theta;
    strip_length_ = std::max(stats.length_mean, floor_) + 12.0 * stats.length_sd
                    + 2.0 * std::max(max_width_term, 0.0) / shape_.depth + 1.0;
    mean_count_ = stats.density_lambda * strip_length_ * shape_.depth;

    height_high_ = region.relay_height;
    height_low_ = region.relay_height - reflection_height_window(region);
}

bool ReflectionTrialKernel::trial_hits(std::uint64_t seed, std::uint64_t trial) const
{
    if (mean_count_ <= 0.0)
        return false;
    const auto regions = static_cast<std::uint64_t>(regions_);
    for (std::uint64_t r = 0; r < regions; ++r)
    {
        auto rng = Xoshiro256ss::substream(seed, trial * regions + r);
        std::poisson_distribution<int> count_dist(mean_count_);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> z(0.0, 1.0);

        const int count = count_dist(rng);
        for (int v = 0; v < count; ++v)
        {
            const double u = unit(rng) * strip_length_;
            const double y = unit(rng) * shape_.depth;
            const double w = std::max(stats_.width_mean + stats_.width_sd * z(rng), floor_);
            const double l = std::max(stats_.length_mean + stats_.length_sd * z(rng), floor_);
            const double h = std::max(stats_.height_mean + stats_.height_sd * z(rng), floor_);
            if (h <= height_low_ || h > height_high_)
                continue;
            if (shape_.for_vehicle(w, l).contains(u, y))
                return true;
        }
    }
    return false;
}

std::uint64_t count_hits_serial(const ReflectionTrialKernel& kernel, std::uint64_t seed,
                                std::uint64_t trials)
{
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t)
        hits += kernel.trial_hits(seed, t) ? 1 : 0;
    return hits;
}

std::uint64_t count_hits_parallel(const ReflectionTrialKernel& kernel, std::uint64_t seed,
                                  std::uint64_t trials, int threads)
{
    const int workers = threads > 0 ? threads : omp_get_max_threads();
    const auto n = static_cast<long long>(trials);
    std::uint64_t hits = 0;
#pragma omp parallel for num_threads(workers) reduction(+ : hits) schedule(static)
    for (long long t = 0; t < n; ++t)
        hits += kernel.trial_hits(seed, static_cast<std::uint64_t>(t)) ? 1 : 0;
    return hits;
}

ReflectionStats monte_carlo_reflection(const VehicleStats& stats, const ReflectionRegionParams& region,
                                       int node_count, const McOptions& options)
{
    if (options.trials == 0)
        throw ValidationError("trials", "must be >= 1");
    if (node_count < 3)
        throw ValidationError("node_count", "reflection oracle needs N >= 3");

    ReflectionStats out;
    out.lambda_rr = lambda_rr(stats, region);
    out.eta = eta_height_fraction(stats, region);
    out.p_refl = reflection_probability(stats, region, node_count);
    out.trials = options.trials;
    out.seed = options.seed;
    out.truncation_floor = options.truncation_floor;

    const ReflectionTrialKernel kernel(stats, region, node_count, options.truncation_floor);
    const std::uint64_t hits = options.parallel
                                   ? count_hits_parallel(kernel, options.seed, options.trials, options.threads)
                                   : count_hits_serial(kernel, options.seed, options.trials);
    out.mc = make_estimate(hits, options.trials);
    return out;
}

}  // namespace iftw
