// SPDX-License-Identifier: Apache-2.0
#include "iftw/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "iftw/error.hpp"
#include "iftw/units.hpp"

namespace iftw {

namespace {

constexpr double kThermalNoiseDensity = -174.0;  // dBm/Hz at 290 K

}  // namespace

void RadioParams::validate() const
{
    if (!std::isfinite(tx_power))
        throw ValidationError("radio.tx_power", "must be finite");
    if (!(carrier_frequency > 0.0))
        throw ValidationError("radio.carrier_frequency", "must be > 0");
    if (!(bandwidth > 0.0))
        throw ValidationError("radio.bandwidth", "must be > 0");
    if (!(path_loss_exponent >= 1.0))
        throw ValidationError("radio.path_loss_exponent", "must be >= 1");
    if (!(attenuation_alpha >= 0.0))
        throw ValidationError("radio.attenuation_alpha", "must be >= 0");
    if (!std::isfinite(noise_figure))
        throw ValidationError("radio.noise_figure", "must be finite");
    if (!std::isfinite(snr_cap))
        throw ValidationError("radio.snr_cap", "must be finite");
    if (!(utility_beta > 0.0 && utility_beta <= 1.0))
        throw ValidationError("radio.utility_beta", "must lie in (0, 1]");
}

double RadioParams::wavelength() const
{
    return kSpeedOfLight / (carrier_frequency * 1e9);
}

double received_power(const RadioParams& params, double tx_gain, double rx_gain, double distance)
{
    if (!(distance > 0.0))
        throw ValidationError("distance", "must be > 0, got " + std::to_string(distance));
    const double spreading = 10.0 * params.path_loss_exponent
                             * std::log10(params.wavelength() / (4.0 * std::numbers::pi * distance));
    const double absorption = 10.0 * std::numbers::log10e * params.attenuation_alpha * distance;
    return params.tx_power + tx_gain + rx_gain + spreading - absorption;
}

double noise_power(const RadioParams& params)
{
    return kThermalNoiseDensity + 10.0 * std::log10(params.bandwidth_hz()) + params.noise_figure;
}

double sinr(double rx_power, double noise, std::optional<double> interference)
{
    if (!interference || *interference == -INFINITY)
        return rx_power - noise;
    return rx_power - power_sum_db(noise, *interference);
}

double link_rate(const RadioParams& params, double sinr_db)
{
    const double ratio = std::min(db_to_linear(sinr_db), db_to_linear(params.snr_cap));
    return params.utility_beta * params.bandwidth_hz() * std::log2(1.0 + ratio);
}

LinkReport make_link_report(const RadioParams& params, double rx_power,
                            std::optional<double> interference)
{
    LinkReport report;
    report.rx_power = rx_power;
    report.noise_power = noise_power(params);
    report.interference = interference;
    report.sinr = sinr(rx_power, report.noise_power, interference);
    report.rate = link_rate(params, report.sinr);
    return report;
}

double calibrate_tx_power(const RadioParams& params, double tx_gain, double rx_gain,
                          double distance, double target_sinr)
{
    RadioParams unit = params;
    unit.tx_power = 0.0;
    const double rx_at_zero = received_power(unit, tx_gain, rx_gain, distance);
    return target_sinr + noise_power(params) - rx_at_zero;
}

}  // namespace iftw
