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

#include "arxon/tuning.hpp"

#include <cmath>
#include <map>

#include "arxon/common.hpp"
#include "arxon/rng.hpp"

namespace arxon {

double VariationMap::mr_shift_nm(int gwi) const {
    return std::abs(per_gwi_pv_shift_nm[static_cast<std::size_t>(gwi)]) + tv_shift_nm;
}

VariationMap generate_variation_map(const Topology& topo, double sigma_pv_nm, double tv_shift_nm,
                                    std::uint64_t seed) {
    if (sigma_pv_nm < 0) throw ConfigError("sigma_pv_nm must be >= 0");
    if (tv_shift_nm < 0) throw ConfigError("tv_shift_nm must be >= 0");
    if (tv_shift_nm > kTuningRangeNm)
        throw ConfigError("thermal shift " + std::to_string(tv_shift_nm) +
                          " nm exceeds the " + std::to_string(kTuningRangeNm) +
                          " nm tuning range even before process variation");

    VariationMap map;
    map.seed = seed;
    map.sigma_pv_nm = sigma_pv_nm;
    map.tv_shift_nm = tv_shift_nm;
    map.per_gwi_pv_shift_nm.reserve(static_cast<std::size_t>(topo.gwi_count()));

    SeededRng rng(seed);
    const double headroom = kTuningRangeNm - tv_shift_nm;
    if (sigma_pv_nm > 0.0 && headroom <= 0.0)
        throw ConfigError("no tuning-range headroom left for process variation");
    for (int g = 0; g < topo.gwi_count(); ++g) {
        double shift = sigma_pv_nm == 0.0 ? 0.0 : sigma_pv_nm * rng.gaussian();
        while (std::abs(shift) > headroom) {
            if (++map.rejections > 1000000)
                throw ConfigError("process-variation sampling cannot satisfy the tuning range");
            shift = sigma_pv_nm * rng.gaussian();
        }
        map.per_gwi_pv_shift_nm.push_back(shift);
    }
    return map;
}

TuningPower tuning_power(const VariationMap& map, const Topology& topo, const DeviceParams& params,
                         const std::set<int>& gated_mrs) {
    TuningPower out;
    const int per_bank = topo.mrs_per_bank;
    out.per_mr_mw.assign(static_cast<std::size_t>(topo.gwi_count() * per_bank), 0.0);
    for (int g = 0; g < topo.gwi_count(); ++g) {
        double shift = map.mr_shift_nm(g);
        for (int i = 0; i < per_bank; ++i) {
            int mr = g * per_bank + i;
            if (gated_mrs.count(mr)) continue;
            double mw = shift * params.tuning_efficiency_mw_per_nm;
            out.per_mr_mw[static_cast<std::size_t>(mr)] = mw;
            out.total_mw += mw;
        }
    }
    return out;
}

std::set<int> gate_truncated_mrs(const TransmissionPlan& plan, std::span<const int> bit_to_mr) {
    const int width = static_cast<int>(bit_to_mr.size());
    auto truncated = [&](int bit) {
        if (plan.decision == TxDecision::Truncate && bit < plan.approx_lsb_bits) return true;
        return plan.int_msb_bits > 0 && bit >= width - plan.int_msb_bits;
    };

    // An MR qualifies only if every bit it serves is truncated.
    std::map<int, bool> all_truncated;
    for (int bit = 0; bit < width; ++bit) {
        int mr = bit_to_mr[static_cast<std::size_t>(bit)];
        auto [it, inserted] = all_truncated.emplace(mr, true);
        it->second = it->second && truncated(bit);
    }
    std::set<int> gated;
    for (const auto& [mr, ok] : all_truncated)
        if (ok) gated.insert(mr);
    return gated;
}

} // namespace arxon
