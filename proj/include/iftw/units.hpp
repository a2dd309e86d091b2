// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace iftw {

constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Sum two powers given in dBm (or any common dB reference) in the linear domain.
// Never below the larger term, even when the smaller one is lost to rounding.
inline double power_sum_db(double a_db, double b_db)
{
    const double hi = std::max(a_db, b_db);
    const double lo = std::min(a_db, b_db);
    if (lo == -INFINITY)
        return hi;
    return hi + 10.0 / std::numbers::ln10 * std::log1p(std::pow(10.0, (lo - hi) / 10.0));
}

}  // namespace iftw
