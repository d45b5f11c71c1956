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

#ifndef ARXON_TUNING_HPP
#define ARXON_TUNING_HPP

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "arxon/approx.hpp"
#include "arxon/topology.hpp"

namespace arxon {

/// Thermo-optic reach: ~60 K of heating range at 0.11 nm/K. Any combined
/// process+thermal shift beyond this cannot be corrected.
inline constexpr double kTuningRangeNm = 6.6;

/// Resonance-shift map: one Gaussian process-variation sample per GWI (PV is
/// modeled at GWI granularity, not per MR) plus a uniform worst-case thermal
/// shift applied to every MR.
struct VariationMap {
    std::uint64_t seed = 0;
    double sigma_pv_nm = 0.0;
    double tv_shift_nm = 6.5;
    std::vector<double> per_gwi_pv_shift_nm;
    int rejections = 0; ///< samples redrawn because |pv| + tv exceeded the tuning range

    /// Total shift each MR of the given GWI must correct.
    double mr_shift_nm(int gwi) const;
};

/// Deterministic per seed: the same (topology, sigma, tv, seed) regenerates a
/// bit-identical map. A tv_shift alone beyond the tuning range is a
/// ConfigError (uncorrectable even with zero PV).
VariationMap generate_variation_map(const Topology& topo, double sigma_pv_nm, double tv_shift_nm,
                                    std::uint64_t seed);

struct TuningPower {
    std::vector<double> per_mr_mw;
    double total_mw = 0.0;
};

/// Heating power across all MR banks; gated MRs draw nothing. MR index
/// g * mrs_per_bank + i addresses MR i of GWI g's bank.
TuningPower tuning_power(const VariationMap& map, const Topology& topo, const DeviceParams& params,
                         const std::set<int>& gated_mrs);

/// MRs that may be powered down for this transmission: exactly those whose
/// assigned bits are all truncated. MRs carrying reduced-power bits stay
/// tuned (detuning them would make the approximated bits unreadable), and an
/// MR carrying any exact bit is never gated.
///
/// bit_to_mr maps each bit of the affected flit to the MR index serving it.
std::set<int> gate_truncated_mrs(const TransmissionPlan& plan, std::span<const int> bit_to_mr);

} // namespace arxon

#endif // ARXON_TUNING_HPP
