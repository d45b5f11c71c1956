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

#include "arxon/photonics.hpp"

#include <cmath>
#include <stdexcept>

#include "arxon/common.hpp"

namespace arxon {

Modulation Modulation::from_name(const std::string& name) {
    if (name == "ook") return ook();
    if (name == "pam4") return pam4();
    throw ConfigError("unknown modulation '" + name + "' (expected ook or pam4)");
}

void Modulation::validate() const {
    if (mode == SignalingMode::Ook && bits_per_symbol != 1)
        throw ConfigError("OOK carries 1 bit per symbol");
    if (mode == SignalingMode::Pam4 && bits_per_symbol != 2)
        throw ConfigError("PAM4 carries 2 bits per symbol");
    if (n_lambda < 1) throw ConfigError("n_lambda must be >= 1");
}

DeviceParams DeviceParams::standard() {
    DeviceParams p;
    p.name = "standard";
    p.receiver_sensitivity_dbm = -20.0;
    p.mr_through_loss_db = 0.02;
    p.mr_drop_loss_db = 0.7;
    p.propagation_loss_db_per_cm = 1.0;
    p.bending_loss_db_per_90deg = 0.01;
    p.tuning_efficiency_mw_per_nm = 6.67;
    p.laser_wall_plug_efficiency = 0.10;
    return p;
}

DeviceParams DeviceParams::aggressive() {
    DeviceParams p;
    p.name = "aggressive";
    p.receiver_sensitivity_dbm = -23.4;
    p.mr_through_loss_db = 0.02;
    p.mr_drop_loss_db = 0.5;
    p.propagation_loss_db_per_cm = 0.25;
    p.bending_loss_db_per_90deg = 0.005;
    p.tuning_efficiency_mw_per_nm = 0.24; // 240 uW/nm
    p.laser_wall_plug_efficiency = 0.10;
    return p;
}

DeviceParams DeviceParams::from_name(const std::string& name) {
    if (name == "standard") return standard();
    if (name == "aggressive") return aggressive();
    throw ConfigError("unknown device-parameter preset '" + name +
                      "' (expected standard or aggressive)");
}

DeviceParams DeviceParams::from_file(const std::string& path) {
    KeyValueFile kv = KeyValueFile::load(path);
    DeviceParams p = from_name(kv.get_string("base", "standard"));
    p.name = kv.get_string("name", path);
    p.receiver_sensitivity_dbm = kv.get_double("receiver_sensitivity_dbm", p.receiver_sensitivity_dbm);
    p.mr_through_loss_db = kv.get_double("mr_through_loss_db", p.mr_through_loss_db);
    p.mr_drop_loss_db = kv.get_double("mr_drop_loss_db", p.mr_drop_loss_db);
    p.propagation_loss_db_per_cm = kv.get_double("propagation_loss_db_per_cm", p.propagation_loss_db_per_cm);
    p.bending_loss_db_per_90deg = kv.get_double("bending_loss_db_per_90deg", p.bending_loss_db_per_90deg);
    p.tuning_efficiency_mw_per_nm = kv.get_double("tuning_efficiency_mw_per_nm", p.tuning_efficiency_mw_per_nm);
    p.laser_wall_plug_efficiency = kv.get_double("laser_wall_plug_efficiency", p.laser_wall_plug_efficiency);
    p.modulation_insertion_loss_db = kv.get_double("modulation_insertion_loss_db", p.modulation_insertion_loss_db);
    p.pam4_signaling_loss_db = kv.get_double("pam4_signaling_loss_db", p.pam4_signaling_loss_db);
    p.pam4_power_scale = kv.get_double("pam4_power_scale", p.pam4_power_scale);
    p.validate();
    return p;
}

void DeviceParams::validate() const {
    if (!std::isfinite(receiver_sensitivity_dbm))
        throw ConfigError("receiver sensitivity must be finite");
    if (mr_through_loss_db < 0 || mr_drop_loss_db < 0 || propagation_loss_db_per_cm < 0 ||
        bending_loss_db_per_90deg < 0 || modulation_insertion_loss_db < 0 ||
        pam4_signaling_loss_db < 0)
        throw ConfigError("loss parameters must be >= 0");
    if (tuning_efficiency_mw_per_nm < 0)
        throw ConfigError("tuning efficiency must be >= 0");
    if (laser_wall_plug_efficiency <= 0 || laser_wall_plug_efficiency > 1)
        throw ConfigError("laser wall-plug efficiency must be in (0, 1]");
    if (pam4_power_scale <= 0)
        throw ConfigError("pam4_power_scale must be > 0");
}

double solve_laser_power(const DeviceParams& params, double path_loss_db, int n_lambda,
                         const Modulation& mode) {
    if (path_loss_db < 0) throw std::invalid_argument("path loss must be >= 0");
    if (n_lambda < 1) throw std::invalid_argument("n_lambda must be >= 1");
    double loss = path_loss_db;
    if (mode.is_pam4()) loss += params.pam4_signaling_loss_db;
    return params.receiver_sensitivity_dbm + loss + 10.0 * std::log10(static_cast<double>(n_lambda));
}

LinkBudget solve_link_budget(const DeviceParams& params, double path_loss_db, int n_lambda,
                             const Modulation& mode) {
    LinkBudget b;
    b.s_detector_dbm = params.receiver_sensitivity_dbm;
    b.p_phot_loss_db = path_loss_db + (mode.is_pam4() ? params.pam4_signaling_loss_db : 0.0);
    b.n_lambda = n_lambda;
    b.p_laser_dbm = solve_laser_power(params, path_loss_db, n_lambda, mode);
    return b;
}

double received_power(double p_injected_dbm, double path_loss_db) {
    if (path_loss_db < 0) throw std::invalid_argument("path loss must be >= 0");
    return p_injected_dbm - path_loss_db;
}

int detect_bit_ook(int transmitted, double p_received_dbm, const DeviceParams& params) {
    if (transmitted != 0 && transmitted != 1)
        throw std::invalid_argument("OOK symbol must be 0 or 1");
    if (transmitted == 0) return 0;
    return p_received_dbm >= params.receiver_sensitivity_dbm - kBoundaryEpsDb ? 1 : 0;
}

int detect_symbol_pam4(int transmitted, double p_received_full_scale_dbm,
                       double p_nominal_full_scale_dbm, const DeviceParams& params) {
    if (transmitted < 0 || transmitted > 3)
        throw std::invalid_argument("PAM4 symbol must be in [0, 3]");
    if (transmitted == 0) return 0;

    const double nominal_mw = dbm_to_mw(p_nominal_full_scale_dbm);
    const double level_mw = static_cast<double>(transmitted) / 3.0 * dbm_to_mw(p_received_full_scale_dbm);

    // Thresholds sit at the midpoints of the nominal levels {0, 1/3, 2/3, 1}.
    int symbol = 0;
    for (int k = 0; k < 3; ++k) {
        double threshold = (2.0 * k + 1.0) / 6.0 * nominal_mw;
        if (level_mw >= threshold) symbol = k + 1;
    }
    if (symbol == 0) return 0;
    double sensitivity_mw = dbm_to_mw(params.receiver_sensitivity_dbm - kBoundaryEpsDb);
    return level_mw >= sensitivity_mw ? symbol : 0;
}

int detect_bits(double p_received_dbm, const DeviceParams& params, const Modulation& mode,
                int transmitted_symbol) {
    if (mode.is_pam4())
        return detect_symbol_pam4(transmitted_symbol, p_received_dbm, p_received_dbm, params);
    return detect_bit_ook(transmitted_symbol, p_received_dbm, params);
}

double wall_plug_power(double p_optical_mw, const DeviceParams& params) {
    if (p_optical_mw < 0) throw std::invalid_argument("optical power must be >= 0");
    return p_optical_mw / params.laser_wall_plug_efficiency;
}

} // namespace arxon
