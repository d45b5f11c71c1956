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

#ifndef ARXON_TOPOLOGY_HPP
#define ARXON_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "arxon/photonics.hpp"

namespace arxon {

enum class TopologyKind { Clos, SwiftNoC, Custom };

/// Waveguide geometry: ordered GWI bank positions along a single
/// representative waveguide, plus the per-bank MR count (one MR per active
/// wavelength) and the constant electrical overheads charged while the
/// network is up.
///
/// Presets place the banks evenly between the first and last MR positions:
/// Clos spans 1.0-3.8 cm with 8 banks on a 4.5 cm waveguide, SwiftNoC spans
/// 1.0-7.8 cm with 16 banks on an 8.3 cm waveguide, both for 64 cores.
struct Topology {
    TopologyKind kind = TopologyKind::Custom;
    std::string name = "custom";
    double waveguide_length_cm = 0.0;
    std::vector<double> gwi_positions_cm;
    int mrs_per_bank = 64; ///< equals n_lambda of the active modulation
    int bends_per_path = 0;
    int core_count = 0;
    double lut_power_mw = 0.0;       ///< lookup-table read/write overhead
    double circuitry_power_mw = 0.0; ///< LUT access circuitry overhead

    static Topology clos(const Modulation& mode = Modulation::ook());
    static Topology swiftnoc(const Modulation& mode = Modulation::ook());
    static Topology from_name(const std::string& name, const Modulation& mode);
    static Topology from_file(const std::string& path, const Modulation& mode);

    int gwi_count() const { return static_cast<int>(gwi_positions_cm.size()); }
    void validate() const;
};

/// Per-path loss accumulation, split by mechanism. total = sum of parts.
struct PathLoss {
    int src = 0;
    int dst = 0;
    double propagation_db = 0.0;
    double through_db = 0.0;
    double drop_db = 0.0;
    double bend_db = 0.0;
    double modulation_db = 0.0;

    double total_db() const {
        return propagation_db + through_db + drop_db + bend_db + modulation_db;
    }
};

/// Loss from src's bank to dst's bank. dst must be downstream of src
/// (single-writer semantics; the SwiftNoC preset models each selected MWMR
/// writer by the same downstream-accumulation rule). Every wavelength passing
/// a non-destination bank is charged one through loss per MR in that bank.
PathLoss path_loss(const Topology& topo, const DeviceParams& params, int src, int dst);

/// Loss from the waveguide start to a hypothetical destination at
/// position_cm; banks strictly before the position contribute through loss.
double loss_from_start(const Topology& topo, const DeviceParams& params, double position_cm);

/// Largest total path loss over all (src, dst) pairs; the network-wide
/// provisioning point.
double worst_case_loss_db(const Topology& topo, const DeviceParams& params);

struct ProfilePoint {
    double position_cm = 0.0;
    double p_laser_dbm = 0.0;
};

/// Laser power required versus destination position: smooth propagation
/// growth with a discrete jump at each GWI bank.
std::vector<ProfilePoint> power_profile(const Topology& topo, const DeviceParams& params,
                                        const Modulation& mode, double resolution_cm);

/// Per-source sets of destinations whose path loss is too large for
/// reduced-power transmission to clear the receiver sensitivity; such
/// destinations get truncation instead.
struct TruncationTable {
    double reduced_power_fraction = 1.0; ///< fraction of full per-wavelength power
    double full_laser_dbm = 0.0;         ///< network-wide injection power (worst-case solve)
    double per_wavelength_full_dbm = 0.0;
    std::vector<std::vector<bool>> truncate_dst; ///< [src][dst]; false where dst is not downstream

    bool should_truncate(int src, int dst) const {
        return truncate_dst[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)];
    }
};

/// Build the table for a given reduced-power fraction in (0, 1]. In PAM4
/// mode the fraction is additionally scaled by pam4_power_scale, matching how
/// approximated signals are actually driven.
TruncationTable truncation_table(const Topology& topo, const DeviceParams& params,
                                 const Modulation& mode, double reduced_power_fraction);

} // namespace arxon

#endif // ARXON_TOPOLOGY_HPP
