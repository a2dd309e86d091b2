// SPDX-License-Identifier: Apache-2.0
//
// Free-space link budget with atmospheric absorption, thermal noise, SINR
// and the capped Shannon rate. Everything is carried in dB / dBm; powers
// only enter the linear domain where they must be summed.
#pragma once

#include <optional>

namespace iftw {

struct RadioParams
{
    double tx_power = 30.0;            // dBm
    double carrier_frequency = 60.0;   // GHz
    double bandwidth = 2160.0;         // MHz
    double path_loss_exponent = 2.0;
    double attenuation_alpha = 0.0016; // 1/m
    double noise_figure = 6.0;         // dB
    double snr_cap = 40.0;             // dB, T_max
    double utility_beta = 0.5;

    void validate() const;
    double wavelength() const;    // m
    double bandwidth_hz() const { return bandwidth * 1e6; }
};

//! 60 GHz / 2.16 GHz channel preset. tx_power is a placeholder until
//! calibrate_tx_power() pins it.
inline RadioParams radio_preset_60ghz() { return {}; }

struct LinkReport
{
    double rx_power = 0.0;                   // dBm
    double noise_power = 0.0;                // dBm
    std::optional<double> interference;      // dBm
    double sinr = 0.0;                       // dB
    double rate = 0.0;                       // bit/s
};

//! P_t + G_t + G_r + 10*n*log10(lambda / (4 pi d)) - 10*log10(e)*alpha*d.
double received_power(const RadioParams& params, double tx_gain, double rx_gain, double distance);

//! -174 dBm/Hz + 10 log10(B) + NF.
double noise_power(const RadioParams& params);

double sinr(double rx_power, double noise, std::optional<double> interference = std::nullopt);

//! beta * B * log2(1 + min(sinr, T_max)), all in linear terms.
double link_rate(const RadioParams& params, double sinr_db);

LinkReport make_link_report(const RadioParams& params, double rx_power,
                            std::optional<double> interference = std::nullopt);

//! Transmit power (dBm) that makes an unperturbed link of the given gains and
//! length reach `target_sinr` dB. Closed form in the dB domain.
double calibrate_tx_power(const RadioParams& params, double tx_gain, double rx_gain,
                          double distance, double target_sinr);

}  // namespace iftw
