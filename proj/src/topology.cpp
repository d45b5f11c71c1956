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

#include "arxon/topology.hpp"

#include <cmath>
#include <sstream>

#include "arxon/common.hpp"

namespace arxon {

namespace {

std::vector<double> even_positions(double first_cm, double last_cm, int count) {
    std::vector<double> pos(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        pos[static_cast<std::size_t>(i)] =
            first_cm + (last_cm - first_cm) * static_cast<double>(i) / static_cast<double>(count - 1);
    return pos;
}

std::vector<double> parse_position_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

} // namespace

Topology Topology::clos(const Modulation& mode) {
    Topology t;
    t.kind = TopologyKind::Clos;
    t.name = "clos";
    t.waveguide_length_cm = 4.5;
    t.gwi_positions_cm = even_positions(1.0, 3.8, 8);
    t.mrs_per_bank = mode.n_lambda;
    t.bends_per_path = 0;
    t.core_count = 64;
    t.lut_power_mw = 0.135;
    t.circuitry_power_mw = 4.224;
    return t;
}

Topology Topology::swiftnoc(const Modulation& mode) {
    Topology t;
    t.kind = TopologyKind::SwiftNoC;
    t.name = "swiftnoc";
    t.waveguide_length_cm = 8.3;
    t.gwi_positions_cm = even_positions(1.0, 7.8, 16);
    t.mrs_per_bank = mode.n_lambda;
    t.bends_per_path = 0;
    t.core_count = 64;
    t.lut_power_mw = 0.27;
    t.circuitry_power_mw = 8.448;
    return t;
}

Topology Topology::from_name(const std::string& name, const Modulation& mode) {
    if (name == "clos") return clos(mode);
    if (name == "swiftnoc") return swiftnoc(mode);
    throw ConfigError("unknown topology '" + name + "' (expected clos or swiftnoc)");
}

Topology Topology::from_file(const std::string& path, const Modulation& mode) {
    KeyValueFile kv = KeyValueFile::load(path);
    std::string base = kv.get_string("base", "");
    Topology t;
    if (!base.empty()) {
        t = from_name(base, mode);
        t.kind = TopologyKind::Custom;
    }
    t.name = kv.get_string("name", "custom");
    t.waveguide_length_cm = kv.get_double("waveguide_length_cm", t.waveguide_length_cm);
    if (kv.has("gwi_positions_cm"))
        t.gwi_positions_cm = parse_position_list(kv.require_string("gwi_positions_cm"));
    t.mrs_per_bank = mode.n_lambda;
    t.bends_per_path = kv.get_int("bends_per_path", t.bends_per_path);
    t.core_count = kv.get_int("core_count", t.core_count);
    t.lut_power_mw = kv.get_double("lut_power_mw", t.lut_power_mw);
    t.circuitry_power_mw = kv.get_double("circuitry_power_mw", t.circuitry_power_mw);
    t.validate();
    return t;
}

void Topology::validate() const {
    if (waveguide_length_cm <= 0) throw ConfigError("waveguide length must be > 0");
    if (gwi_positions_cm.size() < 2) throw ConfigError("need at least two GWI banks");
    double prev = 0.0;
    for (double p : gwi_positions_cm) {
        if (p <= prev) throw ConfigError("GWI positions must be strictly increasing and > 0");
        if (p > waveguide_length_cm)
            throw ConfigError("GWI position beyond the end of the waveguide");
        prev = p;
    }
    if (mrs_per_bank < 1) throw ConfigError("mrs_per_bank must be >= 1");
    if (bends_per_path < 0) throw ConfigError("bends_per_path must be >= 0");
    if (lut_power_mw < 0 || circuitry_power_mw < 0)
        throw ConfigError("static power overheads must be >= 0");
}

PathLoss path_loss(const Topology& topo, const DeviceParams& params, int src, int dst) {
    const int n = topo.gwi_count();
    if (src < 0 || src >= n || dst < 0 || dst >= n)
        throw RoutingError("GWI index out of range");
    if (src == dst) throw RoutingError("source and destination GWI coincide");
    if (dst < src)
        throw RoutingError("destination GWI " + std::to_string(dst) +
                           " is upstream of source " + std::to_string(src));

    PathLoss loss;
    loss.src = src;
    loss.dst = dst;
    const auto& pos = topo.gwi_positions_cm;
    double distance = pos[static_cast<std::size_t>(dst)] - pos[static_cast<std::size_t>(src)];
    loss.propagation_db = params.propagation_loss_db_per_cm * distance;
    int intervening = dst - src - 1;
    loss.through_db = params.mr_through_loss_db * topo.mrs_per_bank * intervening;
    loss.drop_db = params.mr_drop_loss_db;
    loss.bend_db = params.bending_loss_db_per_90deg * topo.bends_per_path;
    loss.modulation_db = params.modulation_insertion_loss_db;
    return loss;
}

double loss_from_start(const Topology& topo, const DeviceParams& params, double position_cm) {
    double loss = params.propagation_loss_db_per_cm * position_cm;
    for (double bank : topo.gwi_positions_cm)
        if (bank < position_cm) loss += params.mr_through_loss_db * topo.mrs_per_bank;
    loss += params.mr_drop_loss_db;
    loss += params.bending_loss_db_per_90deg * topo.bends_per_path;
    loss += params.modulation_insertion_loss_db;
    return loss;
}

double worst_case_loss_db(const Topology& topo, const DeviceParams& params) {
    // Losses only grow with distance and intervening banks, so the first
    // bank talking to the last one dominates.
    return path_loss(topo, params, 0, topo.gwi_count() - 1).total_db();
}

std::vector<ProfilePoint> power_profile(const Topology& topo, const DeviceParams& params,
                                        const Modulation& mode, double resolution_cm) {
    if (resolution_cm <= 0) throw std::invalid_argument("resolution must be > 0");
    std::vector<ProfilePoint> profile;
    const double end = topo.waveguide_length_cm;
    for (int i = 1;; ++i) {
        double x = resolution_cm * i;
        if (x > end + resolution_cm * 0.5) break;
        if (x > end) x = end;
        double loss = loss_from_start(topo, params, x);
        profile.push_back({x, solve_laser_power(params, loss, mode.n_lambda, mode)});
        if (x == end) break;
    }
    return profile;
}

TruncationTable truncation_table(const Topology& topo, const DeviceParams& params,
                                 const Modulation& mode, double reduced_power_fraction) {
    if (reduced_power_fraction <= 0.0 || reduced_power_fraction > 1.0)
        throw std::invalid_argument("reduced power fraction must be in (0, 1]");

    TruncationTable table;
    table.reduced_power_fraction = reduced_power_fraction;
    table.full_laser_dbm =
        solve_laser_power(params, worst_case_loss_db(topo, params), mode.n_lambda, mode);
    table.per_wavelength_full_dbm =
        table.full_laser_dbm - 10.0 * std::log10(static_cast<double>(mode.n_lambda));

    double scale = reduced_power_fraction;
    if (mode.is_pam4()) scale *= params.pam4_power_scale;
    const double reduced_dbm = table.per_wavelength_full_dbm + factor_to_db(scale);

    const int n = topo.gwi_count();
    table.truncate_dst.assign(static_cast<std::size_t>(n),
                              std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int src = 0; src < n; ++src) {
        for (int dst = src + 1; dst < n; ++dst) {
            double received = received_power(reduced_dbm, path_loss(topo, params, src, dst).total_db());
            if (received < params.receiver_sensitivity_dbm - kBoundaryEpsDb)
                table.truncate_dst[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)] = true;
        }
    }
    return table;
}

} // namespace arxon
