// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>

#include "iftw/error.hpp"
#include "iftw/footprint.hpp"
#include "iftw/monte_carlo.hpp"
#include "iftw/rng.hpp"
#include "oracles.hpp"

using namespace iftw;

namespace {

VehicleStats default_traffic(double density)
{
    VehicleStats s;
    s.density_lambda = density;
    return s;
}

}  // namespace

TEST_CASE("rng substreams are reproducible and distinct")
{
    auto a = Xoshiro256ss::substream(7, 3);
    auto b = Xoshiro256ss::substream(7, 3);
    auto c = Xoshiro256ss::substream(7, 4);
    bool differs = false;
    for (int i = 0; i < 64; ++i)
    {
        const auto x = a();
        CHECK(x == b());
        differs |= x != c();
    }
    CHECK(differs);
}

TEST_CASE("footprint area and containment")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> th(12.0, 40.0), g(1.0, 10.0), w(0.5, 3.0), l(1.0, 12.0);
    for (int i = 0; i < 1000; ++i)
    {
        ReflectionRegionParams r;
        r.theta_deg = th(rng);
        r.gamma_angle_deg = g(rng);
        const FootprintShape shape(r);
        const double wv = w(rng), lv = l(rng);
        const auto fp = shape.for_vehicle(wv, lv);
        CHECK(fp.signed_area() == doctest::Approx(oracle::shoelace(fp.vertices())).epsilon(1e-12));
        CHECK(fp.signed_area() == doctest::Approx(fp.depth * lv + shape.width_term(wv)).epsilon(1e-12));
        CHECK(fp.contains(0.0, 0.0));
        CHECK(fp.contains(0.5 * fp.base, 0.5 * fp.depth));
        CHECK_FALSE(fp.contains(-1e-9, 0.5 * fp.depth));
        CHECK_FALSE(fp.contains(0.0, fp.depth * (1.0 + 1e-9)));
        CHECK_FALSE(fp.contains(std::max(fp.base, fp.top) + 1e-6, 0.5 * fp.depth));
    }
}

TEST_CASE("serial and parallel kernels count the same hits")
{
    const ReflectionTrialKernel k(default_traffic(8e-4), {}, 10);
    const auto serial = count_hits_serial(k, 99, 20000);
    for (int threads : {1, 2, 3, 4, 8})
        CHECK(count_hits_parallel(k, 99, 20000, threads) == serial);
    CHECK(serial > 0);
}

TEST_CASE("same seed, same estimate; different seed, different sample")
{
    McOptions o;
    o.trials = 20000;
    o.seed = 5;
    const auto a = monte_carlo_reflection(default_traffic(8e-4), {}, 10, o);
    const auto b = monte_carlo_reflection(default_traffic(8e-4), {}, 10, o);
    CHECK(a.mc.hits == b.mc.hits);
    o.seed = 6;
    const auto c = monte_carlo_reflection(default_traffic(8e-4), {}, 10, o);
    CHECK(c.mc.hits != a.mc.hits);
}

TEST_CASE("empty road never reflects")
{
    McOptions o;
    o.trials = 1000;
    const auto s = monte_carlo_reflection(default_traffic(0.0), {}, 10, o);
    CHECK(s.mc.hits == 0);
    CHECK(s.mc.probability == 0.0);
    CHECK(s.mc.half_width == 0.0);
    CHECK(s.p_refl == 0.0);
    const auto three = monte_carlo_reflection(default_traffic(1e-3), {}, 3, o);
    CHECK(three.mc.hits == 0);
}

TEST_CASE("argument validation")
{
    McOptions o;
    o.trials = 0;
    CHECK_THROWS_AS(monte_carlo_reflection(default_traffic(1e-3), {}, 10, o), ValidationError);
    o.trials = 10;
    CHECK_THROWS_AS(monte_carlo_reflection(default_traffic(1e-3), {}, 2, o), ValidationError);
    o.truncation_floor = -1.0;
    CHECK_THROWS_AS(monte_carlo_reflection(default_traffic(1e-3), {}, 10, o), ValidationError);
}

TEST_CASE("estimate agrees with the closed form when truncation is negligible")
{
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int inside = 0;
    const int sets = 10;
    for (int i = 0; i < sets; ++i)
    {
        VehicleStats s;
        s.width_mean = 1.8 + 0.8 * u(rng);
        s.width_sd = s.width_mean / 4.0 * u(rng);
        s.length_mean = 4.0 + 8.0 * u(rng);
        s.length_sd = s.length_mean / 4.0 * u(rng);
        s.height_mean = 1.5 + 2.0 * u(rng);
        s.height_sd = s.height_mean / 4.0 * u(rng);
        s.density_lambda = 2e-4 + 1.5e-3 * u(rng);
        ReflectionRegionParams r;
        r.theta_deg = 12.0 + 8.0 * u(rng);
        McOptions o;
        o.trials = 100000;
        o.seed = 100 + static_cast<std::uint64_t>(i);
        const auto st = monte_carlo_reflection(s, r, 10, o);
        const double tol = 3.0 * std::max(st.mc.half_width, 1.96 * std::sqrt(0.25 / o.trials) * 0.1);
        inside += std::abs(st.mc.probability - st.p_refl) <= tol ? 1 : 0;
    }
    CHECK(inside >= sets - 1);
}

TEST_CASE("estimate half width")
{
    const auto e = make_estimate(25, 100);
    CHECK(e.probability == 0.25);
    CHECK(e.half_width == doctest::Approx(1.96 * std::sqrt(0.25 * 0.75 / 100.0)));
}
