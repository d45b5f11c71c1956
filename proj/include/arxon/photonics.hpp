/*
 * Copyright 2026 The arxon authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ARXON_PHOTONICS_HPP
#define ARXON_PHOTONICS_HPP

#include <string>

#include "arxon/config.hpp"

namespace arxon {

enum class SignalingMode { Ook, Pam4 };

/// Modulation scheme on the waveguide. Defaults keep the flit bandwidth
/// constant: 64 wavelengths x 1 bit for OOK, 32 wavelengths x 2 bits for
/// PAM4, both moving 64 bits per cycle.
struct Modulation {
    SignalingMode mode = SignalingMode::Ook;
    int bits_per_symbol = 1;
    int n_lambda = 64;

    static Modulation ook(int n_lambda = 64) { return {SignalingMode::Ook, 1, n_lambda}; }
    static Modulation pam4(int n_lambda = 32) { return {SignalingMode::Pam4, 2, n_lambda}; }
    static Modulation from_name(const std::string& name);

    bool is_pam4() const { return mode == SignalingMode::Pam4; }
    std::string name() const { return is_pam4() ? "pam4" : "ook"; }
    void validate() const;
};

/// One named set of optical loss/power/sensitivity constants. The "standard"
/// and "aggressive" presets hold the published prototype and projected device
/// figures this model is calibrated against.
struct DeviceParams {
    std::string name = "custom";
    double receiver_sensitivity_dbm = -20.0;
    double mr_through_loss_db = 0.02;      ///< per passed MR
    double mr_drop_loss_db = 0.7;          ///< once, at the destination drop
    double propagation_loss_db_per_cm = 1.0;
    double bending_loss_db_per_90deg = 0.01;
    double tuning_efficiency_mw_per_nm = 6.67;
    double laser_wall_plug_efficiency = 0.10;  ///< fraction in (0, 1]
    double modulation_insertion_loss_db = 0.0; ///< source-side modulator penalty
    double pam4_signaling_loss_db = 5.8;       ///< extra path loss in PAM4 mode
    double pam4_power_scale = 1.5;             ///< linear multiplier on approximated-signal power in PAM4

    static DeviceParams standard();
    static DeviceParams aggressive();
    static DeviceParams from_name(const std::string& name);
    /// Key/value file; keys mirror the field names (units: dBm, dB, dB/cm,
    /// dB/90deg, mW/nm). An optional `base = standard|aggressive` key selects
    /// the preset the file overrides.
    static DeviceParams from_file(const std::string& path);

    void validate() const;
};

/// Solved injection budget: p_laser - s_detector = p_phot_loss + 10*log10(n_lambda).
struct LinkBudget {
    double p_laser_dbm = 0.0;
    double s_detector_dbm = 0.0;
    double p_phot_loss_db = 0.0;
    int n_lambda = 1;
};

/// Minimal total laser power (dBm) that closes the link budget for the given
/// accumulated path loss and channel count. PAM4 mode adds
/// pam4_signaling_loss_db to the path loss before solving.
double solve_laser_power(const DeviceParams& params, double path_loss_db, int n_lambda,
                         const Modulation& mode);

LinkBudget solve_link_budget(const DeviceParams& params, double path_loss_db, int n_lambda,
                             const Modulation& mode);

/// Signal power after traversing path_loss_db of accumulated loss.
double received_power(double p_injected_dbm, double path_loss_db);

/// OOK detection: a transmitted 1 reads 1 iff the received power clears the
/// receiver sensitivity; a transmitted 0 carries no power and reads 0.
int detect_bit_ook(int transmitted, double p_received_dbm, const DeviceParams& params);

/// PAM4 detection. The four amplitude levels are evenly spaced in linear
/// power between 0 and full scale. The detector quantizes the received
/// amplitude against thresholds at the midpoints of the nominal (full-power)
/// levels, so an under-powered transmission collapses high symbols to lower
/// ones; anything below sensitivity reads 0.
///
/// p_received_full_scale_dbm is the full-scale power of the signal as
/// actually driven (possibly reduced); p_nominal_full_scale_dbm is the
/// provisioned full-power level the receiver's thresholds are built from.
int detect_symbol_pam4(int transmitted, double p_received_full_scale_dbm,
                       double p_nominal_full_scale_dbm, const DeviceParams& params);

/// Mode dispatch with the received power doubling as the nominal full scale
/// (the exact-transmission case).
int detect_bits(double p_received_dbm, const DeviceParams& params, const Modulation& mode,
                int transmitted_symbol);

/// Electrical power drawn to emit p_optical_mw of light.
double wall_plug_power(double p_optical_mw, const DeviceParams& params);

} // namespace arxon

#endif // ARXON_PHOTONICS_HPP
