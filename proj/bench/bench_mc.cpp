// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP Monte Carlo kernel on the baseline
// scenario. Usage: iftw_bench [trials] [threads]
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "iftw/config.hpp"
#include "iftw/monte_carlo.hpp"

int main(int argc, char** argv)
{
    namespace chrono = std::chrono;
    const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
    const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

    const auto cfg = iftw::paper_baseline_config();
    const iftw::ReflectionTrialKernel kernel(cfg.traffic, cfg.region(), cfg.topology.node_count);
    const std::uint64_t seed = cfg.experiment.seed;

    auto t0 = chrono::steady_clock::now();
    const auto serial = iftw::count_hits_serial(kernel, seed, trials);
    auto t1 = chrono::steady_clock::now();
    const auto parallel = iftw::count_hits_parallel(kernel, seed, trials, threads);
    auto t2 = chrono::steady_clock::now();

    const auto ms = [](auto d) { return chrono::duration_cast<chrono::microseconds>(d).count() / 1000.0; };
    std::cout << "trials   " << trials << "\n"
              << "serial   " << ms(t1 - t0) << " ms  hits " << serial << "\n"
              << "openmp   " << ms(t2 - t1) << " ms  hits " << parallel << "  (" << threads << " threads)\n"
              << "speedup  " << ms(t1 - t0) / ms(t2 - t1) << "\n";
    if (serial != parallel)
    {
        std::cerr << "hit counts differ\n";
        return 1;
    }
    return 0;
}
