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

#ifndef ARXON_SIM_HPP
#define ARXON_SIM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arxon/approx.hpp"
#include "arxon/codec.hpp"
#include "arxon/topology.hpp"
#include "arxon/trace.hpp"
#include "arxon/tuning.hpp"

namespace arxon {

// ---------------------------------------------------------------------------
// Flits
// ---------------------------------------------------------------------------

inline constexpr int kFlitBits = 64;
inline constexpr int kMaxBodyFlitsPerPacket = 16;

/// Header-flit layout (LSB first): src[0:6) dst[6:12) datatype[12]
/// position[13] approx_count[14:20) packet_id[20:28) wide_lane[28]
/// body_flits[29:35) int_lsb_count[35:41); the rest is reserved.
/// datatype: 0 = integer, 1 = float. position: 0 = LSB, 1 = MSB.
struct FlitHeader {
    int src = 0;
    int dst = 0;
    bool float_data = false;
    bool msb_position = false;
    int approx_count = 0; ///< 0..32
    int packet_id = 0;    ///< 8 bits
    bool wide_lane = false; ///< 64-bit value lanes
    int body_flits = 0;
    int int_lsb_count = 0; ///< integer LSB approximation width

    std::uint64_t pack() const;
    static FlitHeader unpack(std::uint64_t bits);
};

struct BodyFlit {
    std::uint64_t payload = 0;
    int lane_width = 64; ///< 32 or 64
    int lane_count = 1;  ///< populated value lanes (1 or 2)
};

struct Packet {
    FlitHeader header;
    std::vector<BodyFlit> body;
    DataKind kind = DataKind::Other;
    TransmissionPlan plan;
};

/// Split a record into packets of one header flit plus up to
/// kMaxBodyFlitsPerPacket body flits; packet_id_counter assigns 8-bit ids.
/// The header's approx_count reflects the plan clamped to the lane format.
std::vector<Packet> packetize(const TraceRecord& record, const TransmissionPlan& plan,
                              int& packet_id_counter);

// ---------------------------------------------------------------------------
// Transmission
// ---------------------------------------------------------------------------

enum class PowerClass : std::uint8_t { Full, Reduced, Off };

/// Per-wavelength provisioning shared by a whole run.
struct LinkContext {
    DeviceParams params;
    Modulation modulation;
    double per_wavelength_full_dbm = 0.0; ///< worst-case solve divided across channels
    double laser_fraction = 1.0;          ///< reduced-power scale before the PAM4 multiplier
};

/// Per-bit power classes for a body flit under its plan: approximated LSB
/// lanes get the plan's class, truncated integer MSBs are off, everything
/// else (padding included) transmits at full power.
std::array<PowerClass, kFlitBits> body_bit_classes(const BodyFlit& flit, DataKind kind,
                                                   const TransmissionPlan& plan);

struct TransmitResult {
    std::uint64_t received = 0;
    std::uint64_t recovered_mask = 0; ///< bits whose transmitted value survived
    double laser_optical_mw = 0.0;    ///< payload wavelengths only, this cycle
    int wavelengths_off = 0;
};

/// Push one 64-bit flit through the link: full-power bits always arrive,
/// reduced-power bits are resolved against the receiver sensitivity (and the
/// PAM4 level thresholds), truncated bits carry no signal and read 0.
TransmitResult transmit_flit(std::uint64_t payload, const std::array<PowerClass, kFlitBits>& classes,
                             const LinkContext& ctx, double path_loss_db);

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

enum class Variant { Baseline, TruncationOnly, FixedLowPower, Lorax, Arxon };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct RunConfig {
    std::string topology_name = "clos";
    std::string params_name = "standard";
    Topology topology;       ///< built for the chosen modulation
    DeviceParams params;
    Modulation modulation = Modulation::ook();
    ApproxPolicy policy;
    Variant variant = Variant::Baseline;
    CodecScheme codec_scheme = CodecScheme::Pctm5b;
    bool relaxed_encoding = false;
    bool relaxed_tuning = false;
    double clock_hz = 5e9;
    std::uint64_t seed = 0;
    double sigma_pv_nm = 0.03;
    double tv_shift_nm = 6.5;
    double static_multiplier = 1.0;

    /// Apply variant rules (baseline forces everything off, arxon enables
    /// relaxed encoding unless explicitly overridden) and validate.
    void normalize();
    std::string label() const { return variant_name(variant) + "-" + modulation.name(); }
};

/// Convenience builder: presets resolved by name, variant defaults applied.
RunConfig make_run_config(const std::string& topology, const std::string& params,
                          const std::string& modulation, const std::string& policy,
                          Variant variant);

struct EnergyLedger {
    double laser_energy_pj = 0.0;
    double tuning_energy_pj = 0.0;
    double static_energy_pj = 0.0;
    std::uint64_t codec_cycles = 0; ///< 2 per encoded flit
    std::uint64_t payload_bits = 0; ///< original pre-truncation value bits
    std::uint64_t elapsed_cycles = 0;
    std::uint64_t codec_extra_bits = 0;
    std::uint64_t gated_nibbles = 0;
    std::uint64_t encoded_flits = 0;

    double total_energy_pj() const { return laser_energy_pj + tuning_energy_pj + static_energy_pj; }
};

struct RunDiagnostics {
    std::uint64_t exact_packets = 0;
    std::uint64_t reduced_packets = 0;
    std::uint64_t truncated_packets = 0;
    std::uint64_t msb_violations = 0;
    std::uint64_t demoted_packets = 0;
    std::uint64_t exact_bit_errors = 0; ///< full-power bits that failed detection (must stay 0)
    std::uint64_t transmitted_payload_hash = 0;
    std::uint64_t received_payload_hash = 0;
};

struct SimReport {
    std::string variant_label;
    RunConfig config;
    std::uint64_t trace_hash = 0;
    std::uint64_t trace_records = 0;
    EnergyLedger ledger;
    RunDiagnostics diag;
    int pv_rejections = 0;
    double full_laser_dbm = 0.0;
    double laser_mw_peak = 0.0;

    std::optional<double> epb_pj_per_bit() const;
    double elapsed_s() const;
    double laser_mw_avg() const;
    double tuning_mw_avg() const;
    double static_mw() const;

    nlohmann::ordered_json to_json() const;
    static SimReport from_json(const nlohmann::ordered_json& j);
};

/// Replay a trace through the photonic model. Deterministic for a fixed
/// (config, trace, seed). Traces must be cycle-sorted with valid GWI ids;
/// violations surface as DataError with the record's line number.
SimReport run(const RunConfig& config, const std::vector<TraceRecord>& trace,
              std::uint64_t trace_hash);

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

struct ComparisonRow {
    std::string variant;
    std::optional<double> epb_pj_per_bit;
    double laser_mw_avg = 0.0;
    double laser_mw_peak = 0.0;
    double tuning_mw_avg = 0.0;
    std::optional<double> norm_epb;
    double norm_laser = 0.0;
};

struct ComparisonTable {
    std::string baseline_variant;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> warnings; ///< parameter-sensitivity notes, not failures

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
};

/// Normalize reports against the baseline row (variant "baseline" if
/// present, else the first report). Reports over different traces or
/// topologies cannot be compared.
ComparisonTable compare(const std::vector<SimReport>& reports);

} // namespace arxon

#endif // ARXON_SIM_HPP
