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

#ifndef ARXON_APPROX_HPP
#define ARXON_APPROX_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arxon/topology.hpp"

namespace arxon {

enum class FloatPrecision { Single, Double };

/// IEEE-754 field decomposition. Reassembly reproduces the original bit
/// pattern exactly, including NaNs and subnormals.
struct FloatFields {
    unsigned sign = 0;          ///< 1 bit
    unsigned exponent = 0;      ///< raw biased exponent (8 or 11 bits)
    std::uint64_t mantissa = 0; ///< 23 or 52 bits
    FloatPrecision precision = FloatPrecision::Single;

    int mantissa_width() const { return precision == FloatPrecision::Single ? 23 : 52; }
    int exponent_width() const { return precision == FloatPrecision::Single ? 8 : 11; }
    int bias() const { return precision == FloatPrecision::Single ? 127 : 1023; }
};

FloatFields split_float(float value);
FloatFields split_float(double value);

std::uint32_t join_bits_single(const FloatFields& f);
std::uint64_t join_bits_double(const FloatFields& f);
float join_float_single(const FloatFields& f);
double join_float_double(const FloatFields& f);

/// Per-bit channel result for an approximated LSB range: a set bit in
/// lost_mask means that bit fell below sensitivity and reads 0; clear bits
/// kept their transmitted value.
struct ChannelOutcome {
    std::uint64_t lost_mask = 0;

    static ChannelOutcome all_lost() { return {~std::uint64_t{0}}; }
    static ChannelOutcome all_recovered() { return {0}; }
};

/// Replace the lsb_bits lowest mantissa bits according to the channel
/// outcome. Sign and exponent are never touched; lsb_bits beyond the mantissa
/// width is a PolicyError.
float approximate_float(float value, int lsb_bits, const ChannelOutcome& outcome);
double approximate_float(double value, int lsb_bits, const ChannelOutcome& outcome);

/// Cap a policy's float LSB count to what the lane's format can approximate:
/// the mantissa width for single precision, 32 (the header count range) for
/// double precision.
int effective_float_lsb_bits(int requested, FloatPrecision precision);

struct IntApprox {
    std::uint64_t value = 0;
    bool msb_violation = false; ///< truncated MSBs carried nonzero bits
};

/// Integer approximation on an unsigned width-bit lane: the top msb_bits are
/// dropped from transmission and reconstructed as 0 (lossless when the
/// profiled headroom holds; otherwise flagged), the lowest lsb_bits follow
/// the channel outcome.
IntApprox approximate_int(std::uint64_t value, int width, int msb_bits, int lsb_bits,
                          const ChannelOutcome& outcome);

/// Per-application approximation settings.
struct ApproxPolicy {
    std::string app_name = "none";
    int float_lsb_bits = 0; ///< mantissa LSBs approximated per float value
    int int_msb_bits = 0;   ///< MSBs truncated per approximable integer
    int int_lsb_bits = 0;   ///< LSBs approximated per approximable integer
    double power_reduction = 0.0; ///< 0..1; 1.0 means the LSB path always truncates
    std::set<std::string> approximable_vars; ///< "*" admits any variable

    bool var_approximable(const std::string& var_id) const {
        return approximable_vars.count("*") != 0 || approximable_vars.count(var_id) != 0;
    }
    bool approximates_anything() const {
        return float_lsb_bits > 0 || int_msb_bits > 0 || int_lsb_bits > 0;
    }

    void validate() const;

    static ApproxPolicy preset(const std::string& name);
    static std::vector<std::string> preset_names();
    static ApproxPolicy from_file(const std::string& path);
};

enum class TxDecision { Exact, ReducedPower, Truncate };

/// Resolved per-packet transmission decision. decision/approx_lsb_bits/
/// laser_fraction govern the LSB path; int_msb_bits is the distance-
/// independent MSB truncation applied to integer lanes.
struct TransmissionPlan {
    TxDecision decision = TxDecision::Exact;
    int approx_lsb_bits = 0;
    int int_msb_bits = 0;
    double laser_fraction = 1.0;
};

enum class PacketKind { Float, Int, Other };

struct PlanDiagnostics {
    std::uint64_t demoted_packets = 0; ///< approximable flag set but variable not eligible
};

/// Distance-aware truncate-vs-reduced-power decision. Non-approximable
/// traffic passes through exact; integer packets whose variable is not in the
/// policy's eligible set are conservatively demoted to exact with a
/// diagnostic. trunc_table must be built with this policy's power reduction
/// (fraction = 1 - power_reduction).
TransmissionPlan plan_transmission(const ApproxPolicy& policy, PacketKind kind, bool approximable,
                                   const std::string& var_id, int src, int dst,
                                   const TruncationTable& trunc_table,
                                   PlanDiagnostics* diag = nullptr);

} // namespace arxon

#endif // ARXON_APPROX_HPP
